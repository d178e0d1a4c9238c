//! Monomials in `(w, wb, u, z, zb)` with a graded-lexicographic order.

use std::cmp::Ordering;

/// Exponent vector of one monomial.  `z` and `zb` always have length `n`;
/// ambient monomials have `u == 0`, boundary monomials have `w == wb == 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub w: u32,
    pub wb: u32,
    pub u: u32,
    pub z: Vec<u32>,
    pub zb: Vec<u32>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial {
            w: 0,
            wb: 0,
            u: 0,
            z: vec![0; n],
            zb: vec![0; n],
        }
    }

    pub fn from_parts(w: u32, wb: u32, u: u32, z: Vec<u32>, zb: Vec<u32>) -> Self {
        assert_eq!(z.len(), zb.len());
        Monomial { w, wb, u, z, zb }
    }

    pub fn n(&self) -> usize {
        self.z.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.w + self.wb + self.u + self.z.iter().sum::<u32>() + self.zb.iter().sum::<u32>()
    }

    pub fn is_constant(&self) -> bool {
        self.total_degree() == 0
    }

    /// Swap holomorphic and antiholomorphic exponents (`u` is real and
    /// stays put).
    pub fn conj(&self) -> Self {
        Monomial {
            w: self.wb,
            wb: self.w,
            u: self.u,
            z: self.zb.clone(),
            zb: self.z.clone(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Self {
        assert_eq!(self.n(), other.n());
        Monomial {
            w: self.w + other.w,
            wb: self.wb + other.wb,
            u: self.u + other.u,
            z: self.z.iter().zip(&other.z).map(|(a, b)| a + b).collect(),
            zb: self.zb.iter().zip(&other.zb).map(|(a, b)| a + b).collect(),
        }
    }

    /// Exchange the variables at indices `a` and `b` (both `z` and `zb`).
    pub fn swap_z(&self, a: usize, b: usize) -> Self {
        let mut m = self.clone();
        m.z.swap(a, b);
        m.zb.swap(a, b);
        m
    }

    /// True when the monomial uses only `z`/`zb` variables.
    pub fn is_z_only(&self) -> bool {
        self.w == 0 && self.wb == 0 && self.u == 0
    }

    /// True when no antiholomorphic or real variable appears.
    pub fn is_holomorphic(&self) -> bool {
        self.wb == 0 && self.u == 0 && self.zb.iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.w.cmp(&other.w))
            .then_with(|| self.wb.cmp(&other.wb))
            .then_with(|| self.u.cmp(&other.u))
            .then_with(|| self.z.cmp(&other.z))
            .then_with(|| self.zb.cmp(&other.zb))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_graded_first() {
        let lo = Monomial::from_parts(0, 0, 0, vec![1], vec![0]);
        let hi = Monomial::from_parts(0, 0, 0, vec![0], vec![2]);
        assert!(lo < hi, "degree dominates lexicographic position");
    }

    #[test]
    fn conj_is_involutive() {
        let m = Monomial::from_parts(2, 1, 0, vec![3, 0], vec![1, 4]);
        assert_eq!(m.conj().conj(), m);
        assert_eq!(m.conj().z, vec![1, 4]);
    }
}
