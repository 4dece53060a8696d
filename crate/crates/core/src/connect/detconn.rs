//! Determinant connectors: the Schur-case analogue of the scalar connector,
//! a determinant of connectors over the union of a consecutive interval
//! pair, with missing row entries padded by 0 and missing column entries by
//! upper-1.

use super::{connector, q_power_signed, ConnectorKind};
use crate::combinat::{is_consecutive, rel_strict, rel_weak, IntTuple, Interval};
use crate::error::{Error, Result};
use crate::exactq::{q_integer, QPoly, RatFun};
use crate::sums::schur::all_tuples;

fn union_interval(m: &IntTuple, n: &IntTuple) -> Option<Interval> {
    match (m.interval(), n.interval()) {
        (None, None) => None,
        (Some(a), None) => Some(a),
        (None, Some(b)) => Some(b),
        (Some(a), Some(b)) => Some(Interval::new(a.lo().min(b.lo()), a.hi().max(b.hi()))),
    }
}

fn check_consecutive(m: &IntTuple, n: &IntTuple) -> Result<()> {
    match m.interval() {
        None => {
            if n.is_empty() {
                Ok(())
            } else {
                Err(Error::NotConsecutive)
            }
        }
        Some(j) => {
            if is_consecutive(&j, n.interval().as_ref()) {
                Ok(())
            } else {
                Err(Error::NotConsecutive)
            }
        }
    }
}

/// Laplace expansion along the first row; the matrices here are at most
/// 4 x 4, so no pivoting is needed.
fn determinant(mat: &[Vec<RatFun>]) -> RatFun {
    let n = mat.len();
    match n {
        0 => RatFun::one(),
        1 => mat[0][0].clone(),
        _ => {
            let mut acc = RatFun::zero();
            for (col, entry) in mat[0].iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<RatFun>> = mat[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter_map(|(c, e)| (c != col).then(|| e.clone()))
                            .collect()
                    })
                    .collect();
                let cofactor = &entry.clone() * &determinant(&minor);
                if col % 2 == 0 {
                    acc = &acc + &cofactor;
                } else {
                    acc = &acc - &cofactor;
                }
            }
            acc
        }
    }
}

/// D(m, n) = det( C(m~_{j1}, n~_{j2}) ) over the union of the two intervals,
/// padding m by 0 and n by upper-1 where a coordinate is missing.
///
/// (m's interval, n's interval) must be a consecutive pair; n may be empty
/// when m sits on a singleton interval, which reduces the determinant to a
/// single connector against the right edge.
pub fn det_connector(
    kind: ConnectorKind,
    m: &IntTuple,
    n: &IntTuple,
    upper: u32,
) -> Result<RatFun> {
    check_consecutive(m, n)?;
    let Some(union) = union_interval(m, n) else {
        return Ok(RatFun::one());
    };
    let pad_n = kind.denominator_top(upper) as i64;
    let indices: Vec<i64> = union.iter().collect();
    let mut mat = Vec::with_capacity(indices.len());
    for &j1 in &indices {
        let mv = m.get(j1).unwrap_or(0);
        let mut row = Vec::with_capacity(indices.len());
        for &j2 in &indices {
            let nv = n.get(j2).unwrap_or(pad_n);
            row.push(connector(kind, mv, nv, upper)?);
        }
        mat.push(row);
    }
    Ok(determinant(&mat))
}

fn check_tuple_range(t: &IntTuple, lo: i64, hi: i64, what: &str) -> Result<()> {
    if !t.is_nondecreasing() {
        return Err(Error::Usage(format!("{what} tuple must be non-decreasing")));
    }
    if t.iter().any(|(_, v)| v < lo || v > hi) {
        return Err(Error::Usage(format!(
            "{what} tuple entries must lie in [{lo}, {hi}]"
        )));
    }
    Ok(())
}

/// Tuple difference rule: for non-decreasing m in [1, upper-1]^J and
/// n in [0, upper-1]^{J'},
/// prod(q^m/[m]) D(m, n) = sum over b in [1, upper-1]^J with b ⊴ n of
/// D(m, b) prod(q^b/[b]).
pub fn det_diff_rule(m: &IntTuple, n: &IntTuple, upper: u32) -> Result<bool> {
    check_consecutive(m, n)?;
    check_tuple_range(m, 1, upper as i64 - 1, "m")?;
    check_tuple_range(n, 0, upper as i64 - 1, "n")?;
    let kind = ConnectorKind::Schur;
    let mut weight_m = RatFun::one();
    for (_, v) in m.iter() {
        weight_m = &weight_m
            * &RatFun::new(QPoly::q_pow(v as usize), q_integer(v as u32))?;
    }
    let lhs = &weight_m * &det_connector(kind, m, n, upper)?;
    let interval = m.interval().expect("m is nonempty");
    let mut rhs = RatFun::zero();
    for b in all_tuples(interval, upper) {
        if !rel_weak(&b, n)? {
            continue;
        }
        let mut weight_b = RatFun::one();
        for (_, v) in b.iter() {
            weight_b = &weight_b
                * &RatFun::new(QPoly::q_pow(v as usize), q_integer(v as u32))?;
        }
        rhs = &rhs + &(&det_connector(kind, m, &b, upper)? * &weight_b);
    }
    Ok(lhs == rhs)
}

/// Tuple column rule: for non-decreasing m in [0, upper-1]^J and
/// n in [1, upper-1]^{J'},
/// sum over a in [1, upper-1]^{J'} with m ◁ a of D(a, n) prod(q^{n-a}/[n])
/// = D(m, n - 1) / prod([upper - n]).
pub fn det_column_rule(m: &IntTuple, n: &IntTuple, upper: u32) -> Result<bool> {
    check_consecutive(m, n)?;
    check_tuple_range(m, 0, upper as i64 - 1, "m")?;
    check_tuple_range(n, 1, upper as i64 - 1, "n")?;
    let kind = ConnectorKind::Schur;
    let interval = n.interval().ok_or_else(|| {
        Error::Usage("column rule needs a nonempty n tuple".into())
    })?;
    let mut inv_n = RatFun::one();
    for (_, v) in n.iter() {
        inv_n = &inv_n * &RatFun::new(QPoly::one(), q_integer(v as u32))?;
    }
    let mut lhs = RatFun::zero();
    for a in all_tuples(interval, upper) {
        if !rel_strict(m, &a)? {
            continue;
        }
        // D(a, n) over the pair (J', J').
        let d = det_connector(kind, &a, n, upper)?;
        if d.is_zero() {
            continue;
        }
        let shift: i64 = n
            .iter()
            .zip(a.iter())
            .map(|((_, nv), (_, av))| nv - av)
            .sum();
        lhs = &lhs + &(&(&d * &q_power_signed(shift)) * &inv_n);
    }
    let mut inv_flat = RatFun::one();
    for (_, v) in n.iter() {
        inv_flat = &inv_flat * &RatFun::new(QPoly::one(), q_integer(upper - v as u32))?;
    }
    let rhs = &det_connector(kind, m, &n.shifted(-1), upper)? * &inv_flat;
    Ok(lhs == rhs)
}
