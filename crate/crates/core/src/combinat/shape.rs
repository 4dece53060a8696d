//! Skew Young diagrams with interval diagonals, linear indices, and
//! diagonally constant indices on shapes.

use std::collections::{BTreeMap, BTreeSet};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::interval::{is_consecutive, Interval};
use crate::error::{Error, Result};

/// A composition (k_1, ..., k_r) of positive integers; possibly empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearIndex {
    parts: Vec<u32>,
}

impl LinearIndex {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&k| k == 0) {
            return Err(Error::Usage("index parts must be positive".into()));
        }
        Ok(LinearIndex { parts })
    }

    pub fn empty() -> Self {
        LinearIndex { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Parse the CLI syntax "1,2". An empty string is the empty index.
    pub fn parse_csv(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(LinearIndex::empty());
        }
        let parts = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Usage(format!("bad index part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        LinearIndex::new(parts)
    }
}

impl std::fmt::Display for LinearIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// A skew Young diagram given by its cell set (row, column), validated so
/// that every diagonal slice is an integer interval and adjacent diagonal
/// intervals form consecutive pairs. Downstream sums assume exactly those
/// properties, so anything else is rejected at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewShape {
    cells: BTreeSet<(i64, i64)>,
    /// (p, J_p) for each nonempty diagonal p = i - j, ascending in p.
    diags: Vec<(i64, Interval)>,
}

impl SkewShape {
    pub fn new(cells: impl IntoIterator<Item = (i64, i64)>) -> Result<Self> {
        let cells: BTreeSet<(i64, i64)> = cells.into_iter().collect();
        if cells.is_empty() {
            return Ok(SkewShape {
                cells,
                diags: Vec::new(),
            });
        }

        // Rows must be contiguous intervals.
        let mut rows: BTreeMap<i64, (i64, i64)> = BTreeMap::new();
        for &(i, j) in &cells {
            let e = rows.entry(i).or_insert((j, j));
            e.0 = e.0.min(j);
            e.1 = e.1.max(j);
        }
        for (&i, &(lo, hi)) in &rows {
            for j in lo..=hi {
                if !cells.contains(&(i, j)) {
                    return Err(Error::InvalidShape(format!("row {i} has a gap at column {j}")));
                }
            }
        }

        // Contiguous block of nonempty rows, stacked staircase-fashion:
        // each row starts and ends weakly left of the row above it.
        let row_ids: Vec<i64> = rows.keys().copied().collect();
        for w in row_ids.windows(2) {
            if w[1] != w[0] + 1 {
                return Err(Error::InvalidShape(format!("rows {} and {} are not adjacent", w[0], w[1])));
            }
            let (alo, ahi) = rows[&w[0]];
            let (blo, bhi) = rows[&w[1]];
            if blo > alo || bhi > ahi {
                return Err(Error::InvalidShape(format!(
                    "row {} is not nested under row {}",
                    w[1], w[0]
                )));
            }
        }

        // Diagonal slices D_p = {(i,j) : i-j = p} must map to intervals in j.
        let mut by_p: BTreeMap<i64, BTreeSet<i64>> = BTreeMap::new();
        for &(i, j) in &cells {
            by_p.entry(i - j).or_default().insert(j);
        }
        let ps: Vec<i64> = by_p.keys().copied().collect();
        for w in ps.windows(2) {
            if w[1] != w[0] + 1 {
                return Err(Error::InvalidShape(format!(
                    "diagonals {} and {} are not adjacent",
                    w[0], w[1]
                )));
            }
        }
        let mut diags = Vec::with_capacity(by_p.len());
        for (p, js) in &by_p {
            let lo = *js.first().unwrap();
            let hi = *js.last().unwrap();
            if js.len() as i64 != hi - lo + 1 {
                return Err(Error::InvalidShape(format!("diagonal {p} is not an interval")));
            }
            diags.push((*p, Interval::new(lo, hi)));
        }

        for w in diags.windows(2) {
            let (p_lo, iv_lo) = &w[0];
            let (_, iv_hi) = &w[1];
            if !is_consecutive(iv_lo, Some(iv_hi)) {
                return Err(Error::InvalidShape(format!(
                    "diagonal intervals at {} and {} are not consecutive",
                    p_lo,
                    p_lo + 1
                )));
            }
        }

        Ok(SkewShape { cells, diags })
    }

    /// One row of r cells: (1,1) .. (1,r).
    pub fn row(r: usize) -> Self {
        SkewShape::new((1..=r as i64).map(|j| (1, j))).expect("row shape is valid")
    }

    /// One column of r cells: (1,1) .. (r,1).
    pub fn column(r: usize) -> Self {
        SkewShape::new((1..=r as i64).map(|i| (i, 1))).expect("column shape is valid")
    }

    pub fn cells(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.cells.iter().copied()
    }

    pub fn n_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Nonempty diagonals (p, J_p), ascending in p. The bijection sends
    /// (i, j) in D_p to j in J_p.
    pub fn diagonals(&self) -> &[(i64, Interval)] {
        &self.diags
    }

    /// Smallest and largest nonempty diagonal. Empty shapes have none.
    pub fn p_range(&self) -> Option<(i64, i64)> {
        match (self.diags.first(), self.diags.last()) {
            (Some(a), Some(b)) => Some((a.0, b.0)),
            _ => None,
        }
    }

    pub fn diag_interval(&self, p: i64) -> Option<Interval> {
        self.diags
            .iter()
            .find(|(q, _)| *q == p)
            .map(|(_, iv)| *iv)
    }
}

/// A diagonally constant index: a skew shape together with a weight k_p >= 1
/// for each nonempty diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagIndex {
    shape: SkewShape,
    weights: BTreeMap<i64, u32>,
}

impl DiagIndex {
    pub fn new(shape: SkewShape, weights: BTreeMap<i64, u32>) -> Result<Self> {
        let expected: BTreeSet<i64> = shape.diagonals().iter().map(|(p, _)| *p).collect();
        let got: BTreeSet<i64> = weights.keys().copied().collect();
        if expected != got {
            return Err(Error::Usage(
                "weights must be given exactly on the nonempty diagonals".into(),
            ));
        }
        if weights.values().any(|&k| k == 0) {
            return Err(Error::Usage("diagonal weights must be positive".into()));
        }
        Ok(DiagIndex { shape, weights })
    }

    /// All diagonal weights equal to k.
    pub fn uniform(shape: SkewShape, k: u32) -> Result<Self> {
        let weights = shape.diagonals().iter().map(|(p, _)| (*p, k)).collect();
        DiagIndex::new(shape, weights)
    }

    /// Row shape (1,1)..(1,r) carrying k_t on cell (1,t).
    pub fn from_row(index: &LinearIndex) -> Self {
        let r = index.depth();
        let shape = SkewShape::row(r);
        let weights = index
            .parts()
            .iter()
            .enumerate()
            .map(|(t, &k)| (1 - (t as i64 + 1), k))
            .collect();
        DiagIndex::new(shape, weights).expect("row weights cover the diagonals")
    }

    /// Column shape (1,1)..(r,1) carrying k_t on cell (t,1).
    pub fn from_column(index: &LinearIndex) -> Self {
        let r = index.depth();
        let shape = SkewShape::column(r);
        let weights = index
            .parts()
            .iter()
            .enumerate()
            .map(|(t, &k)| (t as i64, k))
            .collect();
        DiagIndex::new(shape, weights).expect("column weights cover the diagonals")
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn weight_of(&self, p: i64) -> u32 {
        self.weights[&p]
    }

    pub fn weights(&self) -> &BTreeMap<i64, u32> {
        &self.weights
    }

    /// Total weight: sum of k_{i-j} over all cells.
    pub fn total_weight(&self) -> u32 {
        self.shape
            .diagonals()
            .iter()
            .map(|(p, iv)| self.weights[p] * iv.len() as u32)
            .sum()
    }
}

#[derive(Serialize, Deserialize)]
struct ShapeWire {
    cells: Vec<[i64; 2]>,
}

impl Serialize for SkewShape {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ShapeWire {
            cells: self.cells().map(|(i, j)| [i, j]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SkewShape {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = ShapeWire::deserialize(deserializer)?;
        SkewShape::new(wire.cells.into_iter().map(|[i, j]| (i, j)))
            .map_err(|e| D::Error::custom(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct DiagIndexWire {
    cells: Vec<[i64; 2]>,
    weights: BTreeMap<String, u32>,
}

impl Serialize for DiagIndex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DiagIndexWire {
            cells: self.shape.cells().map(|(i, j)| [i, j]).collect(),
            weights: self
                .weights
                .iter()
                .map(|(p, k)| (p.to_string(), *k))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DiagIndex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = DiagIndexWire::deserialize(deserializer)?;
        let shape = SkewShape::new(wire.cells.into_iter().map(|[i, j]| (i, j)))
            .map_err(|e| D::Error::custom(e.to_string()))?;
        let mut weights = BTreeMap::new();
        for (p, k) in wire.weights {
            let p: i64 = p
                .parse()
                .map_err(|_| D::Error::custom(format!("bad diagonal key {p:?}")))?;
            weights.insert(p, k);
        }
        DiagIndex::new(shape, weights).map_err(|e| D::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn corner_shape() -> SkewShape {
        // .X
        // XX
        SkewShape::new([(1, 2), (2, 1), (2, 2)]).unwrap()
    }

    #[test]
    fn diagonals_of_small_shapes() {
        let single = SkewShape::new([(1, 1)]).unwrap();
        assert_eq!(single.diagonals(), &[(0, Interval::singleton(1))]);

        let column = SkewShape::column(2);
        assert_eq!(
            column.diagonals(),
            &[(0, Interval::singleton(1)), (1, Interval::singleton(1))]
        );

        let corner = corner_shape();
        assert_eq!(
            corner.diagonals(),
            &[
                (-1, Interval::singleton(2)),
                (0, Interval::singleton(2)),
                (1, Interval::singleton(1)),
            ]
        );
    }

    #[test]
    fn square_has_a_wide_diagonal() {
        let square = SkewShape::new([(1, 1), (1, 2), (2, 1), (2, 2)]).unwrap();
        assert_eq!(
            square.diagonals(),
            &[
                (-1, Interval::singleton(2)),
                (0, Interval::new(1, 2)),
                (1, Interval::singleton(1)),
            ]
        );
    }

    #[test]
    fn rejects_non_skew_configurations() {
        // Row gap.
        assert!(SkewShape::new([(1, 1), (1, 3)]).is_err());
        // Lower row sticking out to the right.
        assert!(SkewShape::new([(1, 1), (2, 1), (2, 2)]).is_err());
        // Corner-touching cells: diagonal 0 is skipped.
        assert!(SkewShape::new([(1, 2), (2, 1)]).is_err());
        // Disconnected rows.
        assert!(SkewShape::new([(1, 1), (3, 1)]).is_err());
    }

    #[test]
    fn empty_shape_is_legal() {
        let empty = SkewShape::new([]).unwrap();
        assert!(empty.is_empty());
        assert!(empty.diagonals().is_empty());
    }

    #[test]
    fn row_and_column_weights_follow_the_diagonals() {
        let k = LinearIndex::new(vec![1, 2]).unwrap();
        let row = DiagIndex::from_row(&k);
        assert_eq!(row.weight_of(0), 1);
        assert_eq!(row.weight_of(-1), 2);
        let col = DiagIndex::from_column(&k);
        assert_eq!(col.weight_of(0), 1);
        assert_eq!(col.weight_of(1), 2);
    }

    #[test]
    fn diag_index_json_round_trip() {
        let k = DiagIndex::uniform(corner_shape(), 2).unwrap();
        let text = serde_json::to_string(&k).unwrap();
        let back: DiagIndex = serde_json::from_str(&text).unwrap();
        assert_eq!(back, k);
    }

    #[test]
    fn weights_must_cover_diagonals_exactly() {
        let shape = corner_shape();
        let mut weights = BTreeMap::new();
        weights.insert(0i64, 1u32);
        assert!(DiagIndex::new(shape.clone(), weights.clone()).is_err());
        weights.insert(-1, 1);
        weights.insert(1, 1);
        assert!(DiagIndex::new(shape, weights).is_ok());
    }
}
