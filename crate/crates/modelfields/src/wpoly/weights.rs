//! Weight systems `d_j = 1/(2 m_j)`, `d_0 = 1`.

use crate::error::Error;
use crate::exact::{rat, rati, Rat};
use crate::wpoly::Monomial;
use num_integer::Integer;
use num_traits::Zero;

/// Positive integers `m_1..m_n` defining the grading: variable `z_j` gets
/// weight `1/(2 m_j)` and `w` gets weight `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    m: Vec<u32>,
}

impl WeightSystem {
    pub fn new(m: Vec<u32>) -> Result<Self, Error> {
        if m.is_empty() {
            return Err(Error::InvalidWeightSystem("need at least one variable".into()));
        }
        if m.iter().any(|&x| x == 0) {
            return Err(Error::InvalidWeightSystem("every m_j must be positive".into()));
        }
        Ok(WeightSystem { m })
    }

    pub fn n(&self) -> usize {
        self.m.len()
    }

    pub fn m(&self) -> &[u32] {
        &self.m
    }

    /// Weight of `z_j` (0-based index): `1/(2 m_j)`.
    pub fn delta(&self, j: usize) -> Rat {
        rat(1, 2 * i64::from(self.m[j]))
    }

    /// `M = lcm(m_1, ..., m_n)`; every variable weight has denominator
    /// dividing `2M`.
    pub fn lcm_m(&self) -> u64 {
        self.m.iter().fold(1u64, |acc, &x| acc.lcm(&u64::from(x)))
    }

    /// Weight of a multi-index over the `z` variables.
    pub fn multiindex_weight(&self, idx: &[u32]) -> Rat {
        assert_eq!(idx.len(), self.n());
        let mut acc = Rat::zero();
        for (j, &e) in idx.iter().enumerate() {
            if e > 0 {
                acc += self.delta(j) * rati(i64::from(e));
            }
        }
        acc
    }

    /// Weight of a monomial: `w`, `wb` and `u` count with weight 1, each
    /// `z_j` / `zb_j` with weight `d_j`.
    pub fn monomial_weight(&self, mono: &Monomial) -> Rat {
        let whole = i64::from(mono.w) + i64::from(mono.wb) + i64::from(mono.u);
        rati(whole) + self.multiindex_weight(&mono.z) + self.multiindex_weight(&mono.zb)
    }

    /// Signature of a `z`/`zb` monomial: `wt(J) - wt(K)`.
    pub fn signature(&self, mono: &Monomial) -> Rat {
        debug_assert!(mono.w == 0 && mono.wb == 0, "signature needs a z/zb monomial");
        self.multiindex_weight(&mono.z) - self.multiindex_weight(&mono.zb)
    }
}
