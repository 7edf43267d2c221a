//! Little squares, the base square and weaving squares.
//!
//! All indices are 1-based to match the usual matrix notation; entries are
//! stored row-major.

use serde::Serialize;

use crate::error::{Error, Result};

/// The fixed 4x4 base square.
pub const BASE: [[u32; 4]; 4] = [
    [1, 6, 11, 16],
    [7, 4, 13, 10],
    [12, 15, 2, 5],
    [14, 9, 8, 3],
];

/// A square integer matrix, row-major, 1-based accessors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Square {
    order: usize,
    entries: Vec<u32>,
}

impl Square {
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 || rows.iter().any(|r| r.len() != order) {
            return Err(Error::InvalidParameter(
                "square rows must be non-empty and equal length".into(),
            ));
        }
        Ok(Square {
            order,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        assert!((1..=self.order).contains(&i) && (1..=self.order).contains(&j));
        self.entries[(i - 1) * self.order + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, x: u32) {
        assert!((1..=self.order).contains(&i) && (1..=self.order).contains(&j));
        self.entries[(i - 1) * self.order + (j - 1)] = x;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[(i - 1) * self.order..i * self.order]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (1..=self.order).map(|i| self.get(i, j)).collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.entries.chunks(self.order)
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Row-major CSV, one line per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for r in self.rows() {
            let line: Vec<String> = r.iter().map(u32::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

/// Entry `(i, j)` of the little square of order `q` under rotation `rot`.
///
/// `rot = 0` is `q(i-1)+j`; each further step is a clockwise quarter turn.
pub fn little_entry(q: u32, rot: u32, i: u32, j: u32) -> u32 {
    match rot {
        0 => q * (i - 1) + j,
        1 => q * (q - j) + i,
        2 => q * (q - i) + q + 1 - j,
        3 => q * (j - 1) + q + 1 - i,
        _ => unreachable!("rotation index is reduced mod 4"),
    }
}

pub fn little_square(q: u32, rot: u32) -> Result<Square> {
    if q < 1 {
        return Err(Error::InvalidParameter(
            "little square order must be >= 1".into(),
        ));
    }
    if rot > 3 {
        return Err(Error::InvalidParameter(format!(
            "rotation {rot} is outside 0..=3"
        )));
    }
    let rows = (1..=q)
        .map(|i| (1..=q).map(|j| little_entry(q, rot, i, j)).collect())
        .collect();
    Square::from_rows(rows)
}

pub fn base_square() -> Square {
    Square::from_rows(BASE.iter().map(|r| r.to_vec()).collect()).expect("constant square")
}

/// Entry `(i, j)` of `W_{4q}`, both indices in `1..=4q`.
pub fn weaving_entry(q: u32, i: u32, j: u32) -> u32 {
    let (i1, i2) = ((i - 1) / q + 1, (i - 1) % q + 1);
    let (j1, j2) = ((j - 1) / q + 1, (j - 1) % q + 1);
    let rot = (j1 + 4 - i1) % 4;
    (BASE[i1 as usize - 1][j1 as usize - 1] - 1) * q * q + little_entry(q, rot, i2, j2)
}

pub fn weaving_square(q: u32) -> Result<Square> {
    if q < 1 {
        return Err(Error::InvalidParameter(
            "weaving square needs q >= 1".into(),
        ));
    }
    let n = 4 * q;
    let rows = (1..=n)
        .map(|i| (1..=n).map(|j| weaving_entry(q, i, j)).collect())
        .collect();
    Square::from_rows(rows)
}

/// A row or column of a square, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Line {
    Row(usize),
    Column(usize),
}

impl std::fmt::Display for Line {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Line::Row(i) => write!(f, "row {i}"),
            Line::Column(j) => write!(f, "column {j}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub pass: bool,
    pub witness: Option<String>,
}

impl PropertyCheck {
    fn ok() -> Self {
        PropertyCheck {
            pass: true,
            witness: None,
        }
    }

    fn fail(w: impl Into<String>) -> Self {
        PropertyCheck {
            pass: false,
            witness: Some(w.into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeavingReport {
    pub q: usize,
    pub expected_line_sum: u64,
    /// Entries are exactly `1..=16q^2`.
    pub bijection: PropertyCheck,
    /// Every row and column sums to `32q^3 + 2q`.
    pub line_sums: PropertyCheck,
    /// Every row and column holds two disjoint runs of `q` consecutive values.
    pub two_runs: PropertyCheck,
    /// Small entries sit exactly in the two diagonal half blocks.
    pub half_split: PropertyCheck,
}

impl WeavingReport {
    pub fn pass(&self) -> bool {
        self.bijection.pass && self.line_sums.pass && self.two_runs.pass && self.half_split.pass
    }
}

fn lines(order: usize) -> impl Iterator<Item = Line> {
    (1..=order)
        .map(Line::Row)
        .chain((1..=order).map(Line::Column))
}

fn line_values(w: &Square, line: Line) -> Vec<u32> {
    match line {
        Line::Row(i) => w.row(i).to_vec(),
        Line::Column(j) => w.column(j),
    }
}

/// Number of disjoint runs of `q` consecutive integers that fit in `values`.
fn packable_runs(values: &[u32], q: usize) -> usize {
    let mut v = values.to_vec();
    v.sort_unstable();
    let mut count = 0;
    let mut len = 0;
    for k in 0..v.len() {
        if k > 0 && v[k] == v[k - 1] + 1 {
            len += 1;
        } else {
            count += len / q;
            len = 1;
        }
    }
    count + len / q
}

/// Checks the four weaving properties, reporting the first violation of each.
pub fn check_weaving(w: &Square) -> Result<WeavingReport> {
    let order = w.order();
    if !order.is_multiple_of(4) {
        return Err(Error::InvalidParameter(format!(
            "order {order} is not divisible by 4"
        )));
    }
    let q = order / 4;
    let total = (16 * q * q) as u32;
    let expected = 32 * (q as u64).pow(3) + 2 * q as u64;

    let mut bijection = PropertyCheck::ok();
    let mut seen = vec![false; total as usize];
    for i in 1..=order {
        for j in 1..=order {
            let x = w.get(i, j);
            if x == 0 || x > total {
                bijection =
                    PropertyCheck::fail(format!("entry ({i}, {j}) = {x} is outside [1, {total}]"));
            } else if std::mem::replace(&mut seen[x as usize - 1], true) {
                bijection = PropertyCheck::fail(format!("value {x} repeats at ({i}, {j})"));
            }
            if !bijection.pass {
                break;
            }
        }
        if !bijection.pass {
            break;
        }
    }

    let line_sums = lines(order)
        .find_map(|line| {
            let s: u64 = line_values(w, line).iter().map(|&x| u64::from(x)).sum();
            (s != expected)
                .then(|| PropertyCheck::fail(format!("{line} sums to {s}, expected {expected}")))
        })
        .unwrap_or_else(PropertyCheck::ok);

    let two_runs = lines(order)
        .find_map(|line| {
            let k = packable_runs(&line_values(w, line), q);
            (k < 2).then(|| {
                PropertyCheck::fail(format!("{line} holds only {k} disjoint runs of length {q}"))
            })
        })
        .unwrap_or_else(PropertyCheck::ok);

    let small = (8 * q * q) as u32;
    let mut half_split = PropertyCheck::ok();
    'outer: for i in 1..=order {
        for j in 1..=order {
            let same_half = (i <= 2 * q) == (j <= 2 * q);
            if (w.get(i, j) <= small) != same_half {
                half_split = PropertyCheck::fail(format!(
                    "entry ({i}, {j}) = {} breaks the half split at {small}",
                    w.get(i, j)
                ));
                break 'outer;
            }
        }
    }

    Ok(WeavingReport {
        q,
        expected_line_sum: expected,
        bijection,
        line_sums,
        two_runs,
        half_split,
    })
}
