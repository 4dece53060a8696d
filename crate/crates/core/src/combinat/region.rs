//! Generic enumerator for chain-of-blocks summation regions: integer
//! variables with per-variable bounds and pairwise < / <= constraints,
//! visited in lexicographic order by backtracking.

use serde::{Deserialize, Serialize};

/// A pairwise comparison between region variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Cmp {
    Lt,
    Le,
}

/// Variables 0..lo.len() with inclusive bounds lo[i] <= x_i <= hi[i] and
/// constraints (a, cmp, b) meaning x_a < x_b or x_a <= x_b. Inconsistent
/// specs enumerate nothing; they are not an error.
#[derive(Clone, Debug)]
pub struct RegionSpec {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
    pub constraints: Vec<(usize, Cmp, usize)>,
}

impl RegionSpec {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Self {
        assert_eq!(lo.len(), hi.len());
        RegionSpec {
            lo,
            hi,
            constraints: Vec::new(),
        }
    }

    pub fn n_vars(&self) -> usize {
        self.lo.len()
    }

    pub fn lt(&mut self, a: usize, b: usize) -> &mut Self {
        self.constraints.push((a, Cmp::Lt, b));
        self
    }

    pub fn le(&mut self, a: usize, b: usize) -> &mut Self {
        self.constraints.push((a, Cmp::Le, b));
        self
    }

    /// Visit every admissible assignment in lexicographic order.
    pub fn for_each(&self, mut f: impl FnMut(&[i64])) {
        let n = self.n_vars();
        if n == 0 {
            f(&[]);
            return;
        }
        // Constraints are enforced as soon as both endpoints are assigned;
        // with variables assigned in order, that is at max(a, b).
        let mut at: Vec<Vec<(usize, Cmp, usize)>> = vec![Vec::new(); n];
        for &(a, c, b) in &self.constraints {
            at[a.max(b)].push((a, c, b));
        }
        let mut vals = vec![0i64; n];
        self.descend(0, &mut vals, &at, &mut f);
    }

    fn descend(
        &self,
        t: usize,
        vals: &mut Vec<i64>,
        at: &[Vec<(usize, Cmp, usize)>],
        f: &mut impl FnMut(&[i64]),
    ) {
        if t == self.n_vars() {
            f(vals);
            return;
        }
        'next: for v in self.lo[t]..=self.hi[t] {
            vals[t] = v;
            for &(a, c, b) in &at[t] {
                let (xa, xb) = (vals[a], vals[b]);
                let ok = match c {
                    Cmp::Lt => xa < xb,
                    Cmp::Le => xa <= xb,
                };
                if !ok {
                    continue 'next;
                }
            }
            self.descend(t + 1, vals, at, f);
        }
    }

    pub fn enumerate(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        self.for_each(|v| out.push(v.to_vec()));
        out
    }

    pub fn count(&self) -> u64 {
        let mut n = 0;
        self.for_each(|_| n += 1);
        n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weak_chain() {
        // 0 < n1 <= n2 < 3
        let mut r = RegionSpec::new(vec![1, 1], vec![2, 2]);
        r.le(0, 1);
        assert_eq!(r.enumerate(), vec![vec![1, 1], vec![1, 2], vec![2, 2]]);
    }

    #[test]
    fn strict_chain() {
        let mut r = RegionSpec::new(vec![1, 1], vec![2, 2]);
        r.lt(0, 1);
        assert_eq!(r.enumerate(), vec![vec![1, 2]]);
    }

    #[test]
    fn block_region_single_point() {
        // 0 < n11 < 3; 0 < n21 <= n22 < 3; n11 < n21.
        let mut r = RegionSpec::new(vec![1, 1, 1], vec![2, 2, 2]);
        r.le(1, 2).lt(0, 1);
        assert_eq!(r.enumerate(), vec![vec![1, 2, 2]]);
    }

    #[test]
    fn inconsistent_spec_is_empty() {
        let mut r = RegionSpec::new(vec![1], vec![3]);
        r.lt(0, 0);
        assert_eq!(r.count(), 0);
    }

    #[test]
    fn stars_and_bars_count() {
        fn binom(n: u64, k: u64) -> u64 {
            let mut r = 1;
            for i in 0..k {
                r = r * (n - i) / (i + 1);
            }
            r
        }
        for k in 1..=4usize {
            for n in 2..=8i64 {
                let mut r = RegionSpec::new(vec![1; k], vec![n - 1; k]);
                for t in 1..k {
                    r.le(t - 1, t);
                }
                // Weak chains of length k in [1, n-1]: C(n-2+k, k).
                assert_eq!(r.count(), binom((n - 2 + k as i64) as u64, k as u64));
            }
        }
    }
}
