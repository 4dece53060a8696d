//! Direct rational-arithmetic evaluators for the classical (q = 1) sums.
//!
//! These walk the same regions as the q-evaluators but never touch Q(q):
//! each term is a product of integer reciprocals in exact rational
//! arithmetic. They are the independent oracle against which the q = 1
//! specializations are checked.

use num::{One, Zero};

use crate::combinat::{for_each_ssyt, rel_strict, rel_weak, DiagIndex, IntTuple, LinearIndex};
use crate::exactq::{rat_int, Rat};

use super::schur::all_tuples;

fn rat_pow(v: i64, k: u32) -> Rat {
    let mut acc = Rat::one();
    let base = rat_int(v);
    for _ in 0..k {
        acc *= &base;
    }
    acc
}

/// Sum of prod 1/m_i^{k_i} over chains 0 < m_1 < ... < m_r < upper
/// (or weak chains when `strict` is false).
pub fn classical_harmonic(k: &LinearIndex, upper: u32, strict: bool) -> Rat {
    fn descend(parts: &[u32], lo: i64, hi: i64, strict: bool, acc: &Rat, total: &mut Rat) {
        match parts.split_first() {
            None => *total += acc,
            Some((&k0, rest)) => {
                for v in lo..=hi {
                    let acc = acc / rat_pow(v, k0);
                    let next_lo = if strict { v + 1 } else { v };
                    descend(rest, next_lo, hi, strict, &acc, total);
                }
            }
        }
    }
    let mut total = Rat::zero();
    descend(k.parts(), 1, upper as i64 - 1, strict, &Rat::one(), &mut total);
    total
}

/// Flat block sum at q = 1: denominators (upper - n_{j1}) n_{j2} ... with
/// weak chains inside blocks and strict joins between blocks.
pub fn classical_flat(k: &LinearIndex, upper: u32) -> Rat {
    let hi = upper as i64 - 1;
    let mut total = Rat::zero();
    let blocks: Vec<u32> = k.parts().to_vec();
    fn descend(
        blocks: &[u32],
        t_in_block: u32,
        lo: i64,
        hi: i64,
        upper: i64,
        acc: &Rat,
        total: &mut Rat,
    ) {
        match blocks.split_first() {
            None => *total += acc,
            Some((&kj, rest)) => {
                for v in lo..=hi {
                    let factor = if t_in_block == 0 {
                        rat_int(upper - v)
                    } else {
                        rat_int(v)
                    };
                    let acc = acc / factor;
                    if t_in_block + 1 < kj {
                        descend(blocks, t_in_block + 1, v, hi, upper, &acc, total);
                    } else {
                        descend(rest, 0, v + 1, hi, upper, &acc, total);
                    }
                }
            }
        }
    }
    if k.is_empty() {
        return Rat::one();
    }
    descend(&blocks, 0, 1, hi, upper as i64, &Rat::one(), &mut total);
    total
}

/// Star-flat block sum at q = 1: weak chains inside blocks, and each
/// block's first variable weakly below the next block's last.
pub fn classical_star_flat(k: &LinearIndex, upper: u32) -> Rat {
    let hi = upper as i64 - 1;
    if k.is_empty() {
        return Rat::one();
    }
    // Enumerate block by block; remember the previous block's first value.
    fn block(
        blocks: &[u32],
        prev_first: Option<i64>,
        hi: i64,
        upper: i64,
        acc: &Rat,
        total: &mut Rat,
    ) {
        match blocks.split_first() {
            None => *total += acc,
            Some((&kj, rest)) => {
                // vals[0] = n_{j1} <= ... <= n_{j kj}; the cross condition
                // constrains the last one.
                fn chain(
                    kj: u32,
                    t: u32,
                    lo: i64,
                    hi: i64,
                    upper: i64,
                    first: i64,
                    prev_first: Option<i64>,
                    rest: &[u32],
                    acc: &Rat,
                    total: &mut Rat,
                ) {
                    if t == kj {
                        block(rest, Some(first), hi, upper, acc, total);
                        return;
                    }
                    for v in lo..=hi {
                        if t + 1 == kj {
                            if let Some(pf) = prev_first {
                                if pf > v {
                                    continue;
                                }
                            }
                        }
                        let factor = if t == 0 { rat_int(upper - v) } else { rat_int(v) };
                        let acc = acc / factor;
                        let first = if t == 0 { v } else { first };
                        chain(kj, t + 1, v, hi, upper, first, prev_first, rest, &acc, total);
                    }
                }
                chain(kj, 0, 1, hi, upper, 0, prev_first, rest, acc, total);
            }
        }
    }
    let mut total = Rat::zero();
    block(k.parts(), None, hi, upper as i64, &Rat::one(), &mut total);
    total
}

/// Schur harmonic sum at q = 1 over semi-standard fillings.
pub fn classical_schur(kk: &DiagIndex, upper: u32) -> Rat {
    let mut total = Rat::zero();
    for_each_ssyt(kk.shape(), upper, |filling| {
        let mut term = Rat::one();
        for (&(i, j), &v) in filling {
            term /= rat_pow(v, kk.weight_of(i - j));
        }
        total += term;
    });
    total
}

/// Schur flat sum at q = 1 over the layer region (all numerator readings
/// collapse at q = 1, so none is taken).
pub fn classical_schur_flat(kk: &DiagIndex, upper: u32) -> Rat {
    struct Layer {
        interval: crate::combinat::Interval,
        l: u32,
        crosses: bool,
    }
    let mut layers = Vec::new();
    for (p, iv) in kk.shape().diagonals() {
        for l in 1..=kk.weight_of(*p) {
            layers.push(Layer {
                interval: *iv,
                l,
                crosses: l == 1,
            });
        }
    }
    if layers.is_empty() {
        return Rat::one();
    }
    fn descend(
        layers: &[Layer],
        d: usize,
        prev: Option<&IntTuple>,
        upper: u32,
        acc: &Rat,
        total: &mut Rat,
    ) {
        if d == layers.len() {
            *total += acc;
            return;
        }
        let layer = &layers[d];
        for tuple in all_tuples(layer.interval, upper) {
            let ok = match prev {
                None => true,
                Some(p) => if layer.crosses {
                    rel_strict(p, &tuple)
                } else {
                    rel_weak(p, &tuple)
                }
                .expect("layer intervals form consecutive pairs"),
            };
            if !ok {
                continue;
            }
            let mut term = acc.clone();
            for (_, v) in tuple.iter() {
                let f = if layer.l == 1 {
                    rat_int(upper as i64 - v)
                } else {
                    rat_int(v)
                };
                term /= f;
            }
            descend(layers, d + 1, Some(&tuple), upper, &term, total);
        }
    }
    let mut total = Rat::zero();
    descend(&layers, 0, None, upper, &Rat::one(), &mut total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::SkewShape;

    fn idx(parts: &[u32]) -> LinearIndex {
        LinearIndex::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn harmonic_depth_one() {
        // 1 + 1/4 + 1/9 = 49/36
        assert_eq!(
            classical_harmonic(&idx(&[2]), 4, true),
            Rat::new(49.into(), 36.into())
        );
    }

    #[test]
    fn classical_flat_equals_harmonic() {
        for parts in [&[1u32][..], &[2], &[1, 1], &[1, 2], &[2, 1], &[1, 1, 1]] {
            let k = idx(parts);
            for upper in 1..=8u32 {
                assert_eq!(
                    classical_harmonic(&k, upper, true),
                    classical_flat(&k, upper),
                    "{k} at {upper}"
                );
            }
        }
    }

    #[test]
    fn classical_star_flat_equals_weak_harmonic() {
        for parts in [&[1u32][..], &[2], &[1, 2], &[2, 1], &[1, 1, 1]] {
            let k = idx(parts);
            for upper in 1..=7u32 {
                assert_eq!(
                    classical_harmonic(&k, upper, false),
                    classical_star_flat(&k, upper),
                    "{k} at {upper}"
                );
            }
        }
    }

    #[test]
    fn schur_square_unique_filling() {
        let square = SkewShape::new([(1, 1), (1, 2), (2, 1), (2, 2)]).unwrap();
        let kk = DiagIndex::uniform(square, 1).unwrap();
        assert_eq!(classical_schur(&kk, 3), Rat::new(1.into(), 4.into()));
        assert_eq!(classical_schur_flat(&kk, 3), Rat::new(1.into(), 4.into()));
    }
}
