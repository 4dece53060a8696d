//! Enumeration of semi-standard Young tableaux on a skew shape, both by the
//! row/column conditions and as chains of diagonal tuples under the strict
//! interleaving order. The two characterizations must produce the same set;
//! tests and the structural acceptance suite hold them to that.

use std::collections::BTreeMap;

use super::interval::{rel_strict, IntTuple};
use super::shape::SkewShape;

/// A filling of a shape: cell (i, j) -> entry.
pub type Filling = BTreeMap<(i64, i64), i64>;

/// Visit every semi-standard filling with entries in [1, upper-1]: weakly
/// increasing along rows, strictly increasing down columns.
pub fn for_each_ssyt(shape: &SkewShape, upper: u32, mut f: impl FnMut(&Filling)) {
    let cells: Vec<(i64, i64)> = shape.cells().collect();
    if upper <= 1 && !cells.is_empty() {
        return;
    }
    let mut filling = Filling::new();
    fill_cells(&cells, 0, upper as i64 - 1, &mut filling, &mut f);
}

fn fill_cells(
    cells: &[(i64, i64)],
    t: usize,
    max_entry: i64,
    filling: &mut Filling,
    f: &mut impl FnMut(&Filling),
) {
    if t == cells.len() {
        f(filling);
        return;
    }
    let (i, j) = cells[t];
    // Cells arrive in row-major order, so the left and upper neighbors are
    // already placed when present.
    let mut lo = 1;
    if let Some(&left) = filling.get(&(i, j - 1)) {
        lo = lo.max(left);
    }
    if let Some(&above) = filling.get(&(i - 1, j)) {
        lo = lo.max(above + 1);
    }
    for v in lo..=max_entry {
        filling.insert((i, j), v);
        fill_cells(cells, t + 1, max_entry, filling, f);
    }
    filling.remove(&(i, j));
}

pub fn enumerate_ssyt(shape: &SkewShape, upper: u32) -> Vec<Filling> {
    let mut out = Vec::new();
    for_each_ssyt(shape, upper, |f| out.push(f.clone()));
    out
}

/// Visit every chain m_{p0} ◁ m_{p0+1} ◁ ... ◁ m_{p1} of diagonal tuples
/// with entries in [1, upper-1]. Chains are listed diagonal by diagonal in
/// ascending p, matching `shape.diagonals()`.
pub fn for_each_diag_chain(shape: &SkewShape, upper: u32, mut f: impl FnMut(&[IntTuple])) {
    let diags = shape.diagonals();
    if diags.is_empty() {
        f(&[]);
        return;
    }
    if upper <= 1 {
        return;
    }
    let mut chain: Vec<IntTuple> = Vec::with_capacity(diags.len());
    descend_chain(shape, upper, &mut chain, &mut f);
}

fn descend_chain(
    shape: &SkewShape,
    upper: u32,
    chain: &mut Vec<IntTuple>,
    f: &mut impl FnMut(&[IntTuple]),
) {
    let diags = shape.diagonals();
    let d = chain.len();
    if d == diags.len() {
        f(chain);
        return;
    }
    let interval = diags[d].1;
    for_each_tuple(interval.len(), upper as i64 - 1, &mut |vals| {
        let tuple = IntTuple::new(interval.lo(), vals.to_vec());
        let ok = match chain.last() {
            None => true,
            Some(prev) => rel_strict(prev, &tuple).expect("adjacent diagonals are consecutive"),
        };
        if ok {
            chain.push(tuple);
            descend_chain(shape, upper, chain, f);
            chain.pop();
        }
    });
}

/// All tuples in [1, max]^len, lexicographically.
pub(crate) fn for_each_tuple(len: usize, max: i64, f: &mut impl FnMut(&[i64])) {
    let mut vals = vec![0i64; len];
    tuple_descend(0, max, &mut vals, f);
}

fn tuple_descend(t: usize, max: i64, vals: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
    if t == vals.len() {
        f(vals);
        return;
    }
    for v in 1..=max {
        vals[t] = v;
        tuple_descend(t + 1, max, vals, f);
    }
}

/// Reassemble a diagonal chain into a filling: tuple value at (p, j) becomes
/// the entry of cell (j + p, j).
pub fn chain_to_filling(shape: &SkewShape, chain: &[IntTuple]) -> Filling {
    let mut filling = Filling::new();
    for ((p, _), tuple) in shape.diagonals().iter().zip(chain) {
        for (j, v) in tuple.iter() {
            filling.insert((j + p, j), v);
        }
    }
    filling
}
