//! Integer intervals, tuples indexed by them, and the two interleaving
//! orders on tuples over a consecutive pair of intervals.

use crate::error::{Error, Result};

/// A nonempty integer interval [lo, hi]. Possibly-empty intervals are passed
/// around as `Option<Interval>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    lo: i64,
    hi: i64,
}

impl Interval {
    pub fn new(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "empty interval [{lo},{hi}]");
        Interval { lo, hi }
    }

    pub fn singleton(j: i64) -> Self {
        Interval { lo: j, hi: j }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn contains(&self, j: i64) -> bool {
        self.lo <= j && j <= self.hi
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

/// Is (J, J') a consecutive pair? J' must be J with the top element
/// optionally removed and/or lo-1 optionally adjoined.
pub fn is_consecutive(j: &Interval, j_prime: Option<&Interval>) -> bool {
    let (a, b) = (j.lo, j.hi);
    match j_prime {
        // Only J \ {hi} can be empty, which requires a singleton J.
        None => a == b,
        Some(p) => {
            (p.lo == a || p.lo == a - 1) && (p.hi == b || p.hi == b - 1)
        }
    }
}

/// An integer tuple indexed by a contiguous interval; empty tuples are legal
/// and carry no interval.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntTuple {
    lo: i64,
    vals: Vec<i64>,
}

impl IntTuple {
    pub fn new(lo: i64, vals: Vec<i64>) -> Self {
        IntTuple { lo, vals }
    }

    pub fn empty() -> Self {
        IntTuple { lo: 0, vals: Vec::new() }
    }

    /// Constant tuple on an interval.
    pub fn constant(interval: Interval, v: i64) -> Self {
        IntTuple {
            lo: interval.lo,
            vals: vec![v; interval.len()],
        }
    }

    pub fn interval(&self) -> Option<Interval> {
        if self.vals.is_empty() {
            None
        } else {
            Some(Interval::new(self.lo, self.lo + self.vals.len() as i64 - 1))
        }
    }

    pub fn is_empty(&self) -> bool {
        self.vals.is_empty()
    }

    pub fn len(&self) -> usize {
        self.vals.len()
    }

    pub fn get(&self, j: i64) -> Option<i64> {
        if j < self.lo {
            return None;
        }
        self.vals.get((j - self.lo) as usize).copied()
    }

    /// (index, value) pairs in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.vals
            .iter()
            .enumerate()
            .map(|(k, &v)| (self.lo + k as i64, v))
    }

    pub fn values(&self) -> &[i64] {
        &self.vals
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.vals.windows(2).all(|w| w[0] <= w[1])
    }

    /// Componentwise shift by a constant.
    pub fn shifted(&self, delta: i64) -> IntTuple {
        IntTuple {
            lo: self.lo,
            vals: self.vals.iter().map(|v| v + delta).collect(),
        }
    }
}

fn check_pair(m: &IntTuple, n: &IntTuple) -> Result<()> {
    let j = m.interval().ok_or(Error::NotConsecutive)?;
    if is_consecutive(&j, n.interval().as_ref()) {
        Ok(())
    } else {
        Err(Error::NotConsecutive)
    }
}

/// The strict interleaving order m ◁ n for m on J and n on J': m_j < n_j
/// where both indices exist, and n_{j-1} <= m_j where J' holds j-1.
/// Across adjacent diagonals of a skew shape this is exactly
/// "strict down columns, weak along rows".
pub fn rel_strict(m: &IntTuple, n: &IntTuple) -> Result<bool> {
    check_pair(m, n)?;
    for (j, mv) in m.iter() {
        if let Some(nv) = n.get(j) {
            if mv >= nv {
                return Ok(false);
            }
        }
        if let Some(nv) = n.get(j - 1) {
            if nv > mv {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The weak interleaving order m ⊴ n: m_j <= n_j where both indices exist,
/// and n_{j-1} < m_j where J' holds j-1. Note that on a shared interval of
/// length > 1 the second clause still binds adjacent coordinates, so this is
/// coordinatewise <= only on singletons.
pub fn rel_weak(m: &IntTuple, n: &IntTuple) -> Result<bool> {
    check_pair(m, n)?;
    for (j, mv) in m.iter() {
        if let Some(nv) = n.get(j) {
            if mv > nv {
                return Ok(false);
            }
        }
        if let Some(nv) = n.get(j - 1) {
            if nv >= mv {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
