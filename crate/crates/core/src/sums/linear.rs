//! The four linear sum families: strict/weak harmonic q-sums and their
//! flat re-expressions, each as a chain of single integer variables.
//!
//! Every family is evaluated two ways. The naive route enumerates the
//! region point by point and is the correctness anchor; the DP route sweeps
//! the chain once per variable with prefix sums, O(weight * upper) field
//! operations instead of the exponential region walk.

use crate::combinat::{Cmp, LinearIndex, RegionSpec};
use crate::exactq::accum::FracSum;
use crate::exactq::{q_integer, QPoly, RatFun};

/// Per-variable weight in a chain sum.
#[derive(Clone, Copy, Debug)]
pub(crate) enum VarWeight {
    /// q^{(k-1)v} / [v]^k
    Harmonic { k: u32 },
    /// 1 / [upper - v]
    FlatOpen,
    /// q^v / [v]
    FlatTail,
}

impl VarWeight {
    /// Numerator exponent and denominator polynomial at value v.
    pub(crate) fn term(&self, v: i64, upper: u32) -> (usize, QPoly) {
        match *self {
            VarWeight::Harmonic { k } => (
                (k as usize - 1) * v as usize,
                q_integer(v as u32).pow(k),
            ),
            VarWeight::FlatOpen => (0, q_integer(upper - v as u32)),
            VarWeight::FlatTail => (v as usize, q_integer(v as u32)),
        }
    }
}

/// Constraint between a chain variable and its predecessor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Step {
    Lt,
    Le,
    Ge,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct ChainVar {
    pub weight: VarWeight,
    /// None for the first variable of the chain.
    pub step: Option<Step>,
    pub lo: i64,
    pub hi: i64,
}

/// Sum the product of variable weights over all chain assignments, by
/// dynamic programming with prefix (or suffix) accumulation per variable.
/// State cells are lazy fractions so the sweep performs no gcds; the total
/// is canonicalized once.
pub(crate) fn chain_dp(vars: &[ChainVar], upper: u32) -> RatFun {
    if vars.is_empty() {
        return RatFun::one();
    }
    let vmax = vars.iter().map(|v| v.hi).max().unwrap();
    if vmax < 1 {
        return RatFun::zero();
    }
    let axis = vmax as usize;
    // state[v-1] = sum over admissible prefixes ending at value v.
    let mut state: Vec<FracSum> = vec![FracSum::new(); axis];
    for (t, var) in vars.iter().enumerate() {
        let mut next = vec![FracSum::new(); axis];
        if t == 0 {
            for v in var.lo.max(1)..=var.hi {
                let (exp, den) = var.weight.term(v, upper);
                next[v as usize - 1] = FracSum::from_term(QPoly::q_pow(exp), den);
            }
        } else {
            let reach = reachable_sums(&state, var.step.expect("later vars carry a step"));
            for v in var.lo.max(1)..=var.hi {
                let r = &reach[v as usize - 1];
                if !r.is_zero() {
                    let (exp, den) = var.weight.term(v, upper);
                    next[v as usize - 1] = r.mul_term(&QPoly::q_pow(exp), &den);
                }
            }
        }
        state = next;
    }
    let mut total = FracSum::new();
    for s in &state {
        total.add_frac(s);
    }
    total.value()
}

/// reach[v-1] = sum of state[u-1] over all u with (u step v).
fn reachable_sums(state: &[FracSum], step: Step) -> Vec<FracSum> {
    let axis = state.len();
    let mut out = vec![FracSum::new(); axis];
    match step {
        Step::Lt | Step::Le => {
            let mut acc = FracSum::new();
            for v in 0..axis {
                if step == Step::Le {
                    acc.add_frac(&state[v]);
                    out[v] = acc.clone();
                } else {
                    out[v] = acc.clone();
                    acc.add_frac(&state[v]);
                }
            }
        }
        Step::Ge => {
            let mut acc = FracSum::new();
            for v in (0..axis).rev() {
                acc.add_frac(&state[v]);
                out[v] = acc.clone();
            }
        }
    }
    out
}

/// Chain layout shared by the naive and DP routes for one sum family.
pub(crate) struct LinearLayout {
    /// Variables in region (lexicographic) order.
    pub vars: Vec<ChainVar>,
    /// Extra non-adjacent constraints, as (earlier var, cmp, later var).
    pub extra: Vec<(usize, Cmp, usize)>,
}

impl LinearLayout {
    fn region(&self) -> RegionSpec {
        let mut spec = RegionSpec::new(
            self.vars.iter().map(|v| v.lo).collect(),
            self.vars.iter().map(|v| v.hi).collect(),
        );
        for (t, var) in self.vars.iter().enumerate() {
            match var.step {
                None => {}
                Some(Step::Lt) => {
                    spec.lt(t - 1, t);
                }
                Some(Step::Le) => {
                    spec.le(t - 1, t);
                }
                Some(Step::Ge) => {
                    spec.le(t, t - 1);
                }
            }
        }
        for &(a, c, b) in &self.extra {
            spec.constraints.push((a, c, b));
        }
        spec
    }

    /// Naive evaluation: walk the region, one exact term per point, summed
    /// over the fixed common denominator so no per-point gcd is needed.
    pub fn eval_naive(&self, upper: u32) -> RatFun {
        let factors: u32 = self
            .vars
            .iter()
            .map(|v| match v.weight {
                VarWeight::Harmonic { k } => k,
                _ => 1,
            })
            .sum();
        let common = super::common_denominator(upper, factors);
        let mut num_acc = QPoly::zero();
        let mut points = 0u64;
        self.region().for_each(|point| {
            let mut exp = 0usize;
            let mut den = QPoly::one();
            for (var, &v) in self.vars.iter().zip(point) {
                let (e, d) = var.weight.term(v, upper);
                exp += e;
                den = &den * &d;
            }
            let scaled = common.exact_div(&den).expect("term divides the common denominator");
            num_acc = &num_acc + &(&scaled * &QPoly::q_pow(exp));
            crate::exactq::count_ring_op();
            points += 1;
        });
        if points == 0 || num_acc.is_zero() {
            return RatFun::zero();
        }
        RatFun::new(num_acc, common).expect("common denominator is nonzero")
    }
}

/// Strict or weak harmonic chain: variables m_1 .. m_r in [1, upper-1].
fn harmonic_layout(k: &LinearIndex, upper: u32, strict: bool) -> LinearLayout {
    let hi = upper as i64 - 1;
    let vars = k
        .parts()
        .iter()
        .enumerate()
        .map(|(t, &ki)| ChainVar {
            weight: VarWeight::Harmonic { k: ki },
            step: (t > 0).then_some(if strict { Step::Lt } else { Step::Le }),
            lo: 1,
            hi,
        })
        .collect();
    LinearLayout {
        vars,
        extra: Vec::new(),
    }
}

/// Flat block chain: within block j the variables n_{j1} <= ... <= n_{jk_j}
/// are weakly increasing, blocks are joined strictly.
fn flat_layout(k: &LinearIndex, upper: u32) -> LinearLayout {
    let hi = upper as i64 - 1;
    let mut vars = Vec::new();
    for (j, &kj) in k.parts().iter().enumerate() {
        for t in 0..kj {
            let weight = if t == 0 {
                VarWeight::FlatOpen
            } else {
                VarWeight::FlatTail
            };
            let step = if j == 0 && t == 0 {
                None
            } else if t == 0 {
                Some(Step::Lt)
            } else {
                Some(Step::Le)
            };
            vars.push(ChainVar {
                weight,
                step,
                lo: 1,
                hi,
            });
        }
    }
    LinearLayout {
        vars,
        extra: Vec::new(),
    }
}

/// Star-flat region: weak chains within blocks, and each block's first
/// variable weakly below the next block's last variable. In region order
/// that cross constraint skips over the intervening variables, so the naive
/// route carries it in `extra`; the DP route walks the equivalent zigzag
/// path (top of block 1 down to its first variable, across to the top of
/// block 2, and so on), where every constraint is again adjacent.
fn star_flat_layout(k: &LinearIndex, upper: u32) -> LinearLayout {
    let hi = upper as i64 - 1;
    let mut vars = Vec::new();
    let mut extra = Vec::new();
    let mut first_of_prev: Option<usize> = None;
    for &kj in k.parts() {
        let first = vars.len();
        let last = first + kj as usize - 1;
        for t in 0..kj {
            vars.push(ChainVar {
                weight: if t == 0 {
                    VarWeight::FlatOpen
                } else {
                    VarWeight::FlatTail
                },
                step: (t > 0).then_some(Step::Le),
                lo: 1,
                hi,
            });
        }
        if let Some(pf) = first_of_prev {
            extra.push((pf, Cmp::Le, last));
        }
        first_of_prev = Some(first);
    }
    LinearLayout { vars, extra }
}

/// The star-flat chain rewritten as a pure zigzag path for the DP: block
/// variables from the top down (each <= its predecessor), then a weak rise
/// onto the next block's top.
fn star_flat_path(k: &LinearIndex, upper: u32) -> Vec<ChainVar> {
    let hi = upper as i64 - 1;
    let mut vars = Vec::new();
    for (j, &kj) in k.parts().iter().enumerate() {
        for t in (0..kj).rev() {
            let weight = if t == 0 {
                VarWeight::FlatOpen
            } else {
                VarWeight::FlatTail
            };
            let step = if vars.is_empty() {
                None
            } else if t == kj - 1 {
                // Entering block j at its last variable: previous block's
                // first variable must be <= it.
                debug_assert!(j > 0);
                Some(Step::Le)
            } else {
                // Walking down the block: this variable is <= the previous.
                Some(Step::Ge)
            };
            vars.push(ChainVar {
                weight,
                step,
                lo: 1,
                hi,
            });
        }
    }
    vars
}

/// Harmonic q-sum over strictly increasing chains (DP route).
pub fn zeta_bz(k: &LinearIndex, upper: u32) -> RatFun {
    chain_dp(&harmonic_layout(k, upper, true).vars, upper)
}

pub fn zeta_bz_naive(k: &LinearIndex, upper: u32) -> RatFun {
    harmonic_layout(k, upper, true).eval_naive(upper)
}

/// Flat block sum (DP route).
pub fn zeta_qflat(k: &LinearIndex, upper: u32) -> RatFun {
    chain_dp(&flat_layout(k, upper).vars, upper)
}

pub fn zeta_qflat_naive(k: &LinearIndex, upper: u32) -> RatFun {
    flat_layout(k, upper).eval_naive(upper)
}

/// Harmonic q-sum over weakly increasing chains (DP route).
pub fn zeta_bz_star(k: &LinearIndex, upper: u32) -> RatFun {
    chain_dp(&harmonic_layout(k, upper, false).vars, upper)
}

pub fn zeta_bz_star_naive(k: &LinearIndex, upper: u32) -> RatFun {
    harmonic_layout(k, upper, false).eval_naive(upper)
}

/// Star-flat block sum with the weak cross-block condition (DP route).
pub fn zeta_qstar_flat(k: &LinearIndex, upper: u32) -> RatFun {
    chain_dp(&star_flat_path(k, upper), upper)
}

pub fn zeta_qstar_flat_naive(k: &LinearIndex, upper: u32) -> RatFun {
    star_flat_layout(k, upper).eval_naive(upper)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::rat_int;

    fn pl(coeffs: &[i64]) -> QPoly {
        QPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFun {
        RatFun::new(pl(num), pl(den)).unwrap()
    }

    fn idx(parts: &[u32]) -> LinearIndex {
        LinearIndex::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn empty_index_sums_to_one() {
        for upper in 1..=4 {
            assert_eq!(zeta_bz(&LinearIndex::empty(), upper), RatFun::one());
            assert_eq!(zeta_qflat(&LinearIndex::empty(), upper), RatFun::one());
            assert_eq!(zeta_bz_star(&LinearIndex::empty(), upper), RatFun::one());
            assert_eq!(zeta_qstar_flat(&LinearIndex::empty(), upper), RatFun::one());
        }
    }

    #[test]
    fn depth_one_examples() {
        // 1/[1] + 1/[2] = (2+q)/(1+q)
        let expect = rf(&[2, 1], &[1, 1]);
        assert_eq!(zeta_bz(&idx(&[1]), 3), expect);
        assert_eq!(zeta_qflat(&idx(&[1]), 3), expect);
        assert_eq!(zeta_bz_star(&idx(&[1]), 3), expect);
        assert_eq!(zeta_qstar_flat(&idx(&[1]), 3), expect);
    }

    #[test]
    fn empty_region_sums_to_zero() {
        assert!(zeta_bz(&idx(&[2, 1]), 2).is_zero());
        assert!(zeta_bz(&idx(&[1]), 1).is_zero());
        assert!(zeta_qflat(&idx(&[1, 1, 1]), 3).is_zero());
    }

    #[test]
    fn flat_sum_single_region_point() {
        // Only (1, 2, 2) contributes: q^2 / ([2][1][2]) = q^2/(1+q)^2.
        assert_eq!(zeta_qflat(&idx(&[1, 2]), 3), rf(&[0, 0, 1], &[1, 2, 1]));
    }

    #[test]
    fn star_golden_values_upper_three() {
        // q + q^2/[2]^2 + q^2/[2]^3
        let golden = {
            let q = RatFun::q();
            let two = RatFun::from(pl(&[1, 1]));
            let t2 = RatFun::q_pow(2).div(&two.pow(2)).unwrap();
            let t3 = RatFun::q_pow(2).div(&two.pow(3)).unwrap();
            &(&q + &t2) + &t3
        };
        assert_eq!(zeta_bz_star(&idx(&[1, 2]), 3), golden);
        // The five-term star-flat display sums to the same value.
        assert_eq!(zeta_qstar_flat(&idx(&[1, 2]), 3), golden);
    }

    #[test]
    fn dp_matches_naive_on_a_grid() {
        let indices = [
            idx(&[1]),
            idx(&[2]),
            idx(&[1, 1]),
            idx(&[1, 2]),
            idx(&[2, 1]),
            idx(&[3, 1]),
            idx(&[1, 1, 2]),
            idx(&[2, 2]),
        ];
        for k in &indices {
            for upper in 1..=6u32 {
                assert_eq!(zeta_bz(k, upper), zeta_bz_naive(k, upper), "bz {k} {upper}");
                assert_eq!(
                    zeta_qflat(k, upper),
                    zeta_qflat_naive(k, upper),
                    "qflat {k} {upper}"
                );
                assert_eq!(
                    zeta_bz_star(k, upper),
                    zeta_bz_star_naive(k, upper),
                    "bz-star {k} {upper}"
                );
                assert_eq!(
                    zeta_qstar_flat(k, upper),
                    zeta_qstar_flat_naive(k, upper),
                    "qstar-flat {k} {upper}"
                );
            }
        }
    }

    #[test]
    fn harmonic_equals_flat_small_grid() {
        let indices = [idx(&[1]), idx(&[2]), idx(&[1, 1]), idx(&[1, 2]), idx(&[2, 1])];
        for k in &indices {
            for upper in 1..=6u32 {
                assert_eq!(zeta_bz(k, upper), zeta_qflat(k, upper), "{k} at {upper}");
                assert_eq!(
                    zeta_bz_star(k, upper),
                    zeta_qstar_flat(k, upper),
                    "star {k} at {upper}"
                );
            }
        }
    }
}
