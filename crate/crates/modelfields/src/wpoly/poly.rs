//! Sparse mixed polynomials over the Gaussian rationals.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::exact::{gq, Gq, Rat};
use crate::wpoly::Monomial;

/// Variable context of a polynomial.
///
/// Ambient polynomials live in `(w, wb, z, zb)`; boundary polynomials live
/// in `(u, z, zb)` where `u` is a first-class commuting real variable (the
/// real part of `w` on the boundary graph).  Keeping `u` symbolic makes
/// "vanishes on the boundary" decidable: it becomes "is the zero
/// polynomial".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ctx {
    Ambient,
    Boundary,
}

/// Finitely supported map from monomials to Gaussian-rational coefficients.
///
/// Invariants: no stored zero coefficients; every monomial has the same
/// variable count and respects the context (`u == 0` in ambient,
/// `w == wb == 0` in boundary).  Terms are kept in graded-lexicographic
/// order, so iteration, printing and hashing are canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedPoly {
    n: usize,
    ctx: Ctx,
    terms: BTreeMap<Monomial, Gq>,
}

impl MixedPoly {
    pub fn zero(n: usize, ctx: Ctx) -> Self {
        MixedPoly {
            n,
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, ctx: Ctx, c: Gq) -> Self {
        let mut p = MixedPoly::zero(n, ctx);
        p.insert(Monomial::one(n), c);
        p
    }

    pub fn var_w(n: usize) -> Self {
        let mut m = Monomial::one(n);
        m.w = 1;
        MixedPoly::monomial(n, Ctx::Ambient, m)
    }

    pub fn var_wb(n: usize) -> Self {
        let mut m = Monomial::one(n);
        m.wb = 1;
        MixedPoly::monomial(n, Ctx::Ambient, m)
    }

    pub fn var_u(n: usize) -> Self {
        let mut m = Monomial::one(n);
        m.u = 1;
        MixedPoly::monomial(n, Ctx::Boundary, m)
    }

    /// `z_j`, 0-based index.
    pub fn var_z(n: usize, j: usize, ctx: Ctx) -> Self {
        let mut m = Monomial::one(n);
        m.z[j] = 1;
        MixedPoly::monomial(n, ctx, m)
    }

    /// `zb_j`, 0-based index.
    pub fn var_zb(n: usize, j: usize, ctx: Ctx) -> Self {
        let mut m = Monomial::one(n);
        m.zb[j] = 1;
        MixedPoly::monomial(n, ctx, m)
    }

    pub fn monomial(n: usize, ctx: Ctx, mono: Monomial) -> Self {
        let mut p = MixedPoly::zero(n, ctx);
        p.insert(mono, Gq::from(Rat::from_integer(1.into())));
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Gq)>>(
        n: usize,
        ctx: Ctx,
        it: I,
    ) -> Self {
        let mut p = MixedPoly::zero(n, ctx);
        for (m, c) in it {
            p.insert(m, c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> Ctx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Gq)> {
        self.terms.iter()
    }

    /// First term in canonical order, if any.
    pub fn leading(&self) -> Option<(&Monomial, &Gq)> {
        self.terms.iter().next()
    }

    pub fn coeff(&self, mono: &Monomial) -> Gq {
        self.terms.get(mono).cloned().unwrap_or_else(Gq::zero)
    }

    /// Add `c` to the coefficient of `mono`, dropping it if the sum is zero.
    pub fn insert(&mut self, mono: Monomial, c: Gq) {
        assert_eq!(mono.n(), self.n, "monomial has wrong variable count");
        match self.ctx {
            Ctx::Ambient => assert!(mono.u == 0, "ambient monomial cannot contain u"),
            Ctx::Boundary => {
                assert!(mono.w == 0 && mono.wb == 0, "boundary monomial cannot contain w")
            }
        }
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Gq) -> Self {
        if c.is_zero() {
            return MixedPoly::zero(self.n, self.ctx);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, v)| (m.clone(), v.clone() * c.clone()))
            .collect();
        MixedPoly {
            n: self.n,
            ctx: self.ctx,
            terms,
        }
    }

    pub fn scale_rat(&self, c: &Rat) -> Self {
        self.scale(&gq(c.clone(), Rat::zero()))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MixedPoly::constant(self.n, self.ctx, Gq::from(Rat::from_integer(1.into())));
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Complex conjugate: conjugates coefficients and swaps holomorphic with
    /// antiholomorphic exponents (`u` is real).
    pub fn conj(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.conj(), c.conj()))
            .collect();
        MixedPoly {
            n: self.n,
            ctx: self.ctx,
            terms,
        }
    }

    /// `(self + conj self) / 2`.
    pub fn re_part(&self) -> Self {
        let half = gq(Rat::new(1.into(), 2.into()), Rat::zero());
        (self + &self.conj()).scale(&half)
    }

    /// `(self - conj self) / (2i)`.
    pub fn im_part(&self) -> Self {
        let half_over_i = gq(Rat::zero(), Rat::new((-1).into(), 2.into()));
        (self - &self.conj()).scale(&half_over_i)
    }

    /// True iff the coefficient of every monomial equals the conjugate of
    /// the coefficient of the conjugate monomial.
    pub fn is_real(&self) -> bool {
        self.terms
            .iter()
            .all(|(m, c)| self.coeff(&m.conj()) == c.conj())
    }

    /// True when no monomial uses `w`, `wb` or `u`.
    pub fn is_z_only(&self) -> bool {
        self.terms.keys().all(|m| m.is_z_only())
    }

    /// True when no antiholomorphic or boundary variable appears.
    pub fn is_holomorphic(&self) -> bool {
        self.terms.keys().all(|m| m.is_holomorphic())
    }

    /// True iff the polynomial contains no purely holomorphic and no purely
    /// antiholomorphic monomials.  Constants count as pure, so any constant
    /// term fails the check; the zero polynomial passes.  Intended for
    /// `z`/`zb`-only polynomials.
    pub fn has_no_pure_terms(&self) -> bool {
        self.terms.keys().all(|m| {
            let holo_deg = m.w + m.z.iter().sum::<u32>();
            let anti_deg = m.wb + m.zb.iter().sum::<u32>();
            holo_deg > 0 && anti_deg > 0
        })
    }

    /// Largest total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Partial derivative with respect to `z_j`.
    pub fn d_z(&self, j: usize) -> Self {
        self.derive(|m| {
            (m.z[j] > 0).then(|| {
                let mut d = m.clone();
                d.z[j] -= 1;
                (d, m.z[j])
            })
        })
    }

    /// Partial derivative with respect to `zb_j`.
    pub fn d_zb(&self, j: usize) -> Self {
        self.derive(|m| {
            (m.zb[j] > 0).then(|| {
                let mut d = m.clone();
                d.zb[j] -= 1;
                (d, m.zb[j])
            })
        })
    }

    /// Partial derivative with respect to `w`.
    pub fn d_w(&self) -> Self {
        self.derive(|m| {
            (m.w > 0).then(|| {
                let mut d = m.clone();
                d.w -= 1;
                (d, m.w)
            })
        })
    }

    fn derive<F>(&self, rule: F) -> Self
    where
        F: Fn(&Monomial) -> Option<(Monomial, u32)>,
    {
        let mut out = MixedPoly::zero(self.n, self.ctx);
        for (m, c) in &self.terms {
            if let Some((d, e)) = rule(m) {
                out.insert(d, c.clone() * Gq::from(Rat::from_integer(e.into())));
            }
        }
        out
    }

    /// Exchange variables `a` and `b`.
    pub fn swap_z(&self, a: usize, b: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.swap_z(a, b), c.clone()))
            .collect();
        MixedPoly {
            n: self.n,
            ctx: self.ctx,
            terms,
        }
    }

    /// Set `z_j = zb_j = 0` for every `j` except `keep`.
    pub fn restrict_to_axis(&self, keep: usize) -> Self {
        let mut out = MixedPoly::zero(self.n, self.ctx);
        for (m, c) in &self.terms {
            let off_axis = (0..self.n)
                .any(|j| j != keep && (m.z[j] > 0 || m.zb[j] > 0));
            if !off_axis {
                out.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Reinterpret a `z`/`zb`-only polynomial in the other context.
    pub fn with_ctx(&self, ctx: Ctx) -> Self {
        assert!(self.is_z_only(), "context change requires a z/zb-only polynomial");
        MixedPoly {
            n: self.n,
            ctx,
            terms: self.terms.clone(),
        }
    }

    fn assert_compatible(&self, other: &Self) {
        assert_eq!(self.n, other.n, "variable counts disagree");
        assert!(self.ctx == other.ctx, "variable contexts disagree");
    }
}

impl Add for &MixedPoly {
    type Output = MixedPoly;
    fn add(self, rhs: &MixedPoly) -> MixedPoly {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MixedPoly {
    type Output = MixedPoly;
    fn sub(self, rhs: &MixedPoly) -> MixedPoly {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MixedPoly {
    type Output = MixedPoly;
    fn neg(self) -> MixedPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        MixedPoly {
            n: self.n,
            ctx: self.ctx,
            terms,
        }
    }
}

impl Mul for &MixedPoly {
    type Output = MixedPoly;
    fn mul(self, rhs: &MixedPoly) -> MixedPoly {
        self.assert_compatible(rhs);
        let mut out = MixedPoly::zero(self.n, self.ctx);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}
