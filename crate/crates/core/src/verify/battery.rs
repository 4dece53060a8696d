//! Programmatic shape battery: every valid skew shape with at most a given
//! number of cells, translation-normalized, together with all diagonal
//! weight assignments up to a bound. Enumerated rather than kept as
//! fixtures so coverage is reproducible.

use std::collections::BTreeMap;

use crate::combinat::{DiagIndex, LinearIndex, SkewShape};

/// All valid shapes with 1..=max_cells cells, rows numbered from 1 and the
/// leftmost column at 1.
pub fn builtin_shapes(max_cells: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    let max = max_cells as i64;
    // Rows are intervals [a_i, b_i] with the staircase conditions
    // a_{i+1} <= a_i, b_{i+1} <= b_i; the validator filters the rest.
    fn extend(
        rows: &mut Vec<(i64, i64)>,
        cells_used: i64,
        max: i64,
        out: &mut Vec<SkewShape>,
    ) {
        if !rows.is_empty() {
            let min_col = rows.iter().map(|r| r.0).min().unwrap();
            if min_col == 1 {
                let cells = rows.iter().enumerate().flat_map(|(i, &(a, b))| {
                    (a..=b).map(move |j| (i as i64 + 1, j))
                });
                if let Ok(shape) = SkewShape::new(cells) {
                    out.push(shape);
                }
            }
        }
        let (max_a, max_b) = match rows.last() {
            None => (max, max),
            Some(&(a, b)) => (a, b),
        };
        for a in 1..=max_a {
            for b in a..=max_b.min(a + (max - cells_used) - 1) {
                let len = b - a + 1;
                if cells_used + len > max {
                    continue;
                }
                rows.push((a, b));
                extend(rows, cells_used + len, max, out);
                rows.pop();
            }
        }
    }
    let mut rows = Vec::new();
    extend(&mut rows, 0, max, &mut out);
    out.sort_by_key(|s| (s.n_cells(), format!("{s:?}")));
    out.dedup();
    out
}

/// Every weight assignment k_p in [1, max_weight] on the diagonals of a
/// shape.
pub fn weight_assignments(shape: &SkewShape, max_weight: u32) -> Vec<DiagIndex> {
    let ps: Vec<i64> = shape.diagonals().iter().map(|(p, _)| *p).collect();
    let mut out = Vec::new();
    let mut current: Vec<u32> = vec![1; ps.len()];
    loop {
        let weights: BTreeMap<i64, u32> =
            ps.iter().copied().zip(current.iter().copied()).collect();
        out.push(DiagIndex::new(shape.clone(), weights).expect("weights cover diagonals"));
        let mut t = current.len();
        loop {
            if t == 0 {
                return out;
            }
            t -= 1;
            if current[t] < max_weight {
                current[t] += 1;
                for v in current.iter_mut().skip(t + 1) {
                    *v = 1;
                }
                break;
            }
        }
    }
}

/// All compositions (ordered tuples of positive parts) of total weight in
/// [1, max_weight], optionally capped in depth.
pub fn compositions_up_to(max_weight: u32, max_depth: Option<u32>) -> Vec<LinearIndex> {
    let mut out = Vec::new();
    let mut parts: Vec<u32> = Vec::new();
    fn extend(
        parts: &mut Vec<u32>,
        used: u32,
        max_weight: u32,
        max_depth: Option<u32>,
        out: &mut Vec<LinearIndex>,
    ) {
        if !parts.is_empty() {
            out.push(LinearIndex::new(parts.clone()).expect("positive parts"));
        }
        if max_depth.is_some_and(|d| parts.len() as u32 >= d) {
            return;
        }
        for next in 1..=(max_weight - used) {
            parts.push(next);
            extend(parts, used + next, max_weight, max_depth, out);
            parts.pop();
        }
    }
    extend(&mut parts, 0, max_weight, max_depth, &mut out);
    out.sort_by_key(|k| (k.weight(), k.depth(), k.parts().to_vec()));
    out
}
