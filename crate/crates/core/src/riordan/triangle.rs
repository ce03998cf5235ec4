use std::fmt::Write as _;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::spoly::SParamPoly;

/// Lower-triangular array `s_{n,k}`, `0 ≤ k ≤ n ≤ N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawTriangle", into = "RawTriangle")]
pub struct Triangle {
    rows: Vec<Vec<SParamPoly>>,
}

#[derive(Serialize, Deserialize)]
struct RawTriangle {
    #[serde(rename = "N")]
    order: usize,
    rows: Vec<Vec<SParamPoly>>,
}

impl TryFrom<RawTriangle> for Triangle {
    type Error = Error;
    fn try_from(raw: RawTriangle) -> Result<Self> {
        if raw.rows.len() != raw.order + 1 {
            return Err(Error::InvalidParameter(format!(
                "triangle with N = {} needs {} rows, found {}",
                raw.order,
                raw.order + 1,
                raw.rows.len()
            )));
        }
        Triangle::from_rows(raw.rows)
    }
}

impl From<Triangle> for RawTriangle {
    fn from(t: Triangle) -> Self {
        RawTriangle {
            order: t.order(),
            rows: t.rows,
        }
    }
}

impl Triangle {
    /// Row `n` must have exactly `n + 1` entries.
    pub fn from_rows(rows: Vec<Vec<SParamPoly>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidParameter("triangle needs at least one row".into()));
        }
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::InvalidParameter(format!(
                    "row {n} has {} entries, expected {}",
                    row.len(),
                    n + 1
                )));
            }
        }
        Ok(Self { rows })
    }

    /// Builds row by row from an entry function.
    pub fn from_fn(order: usize, mut entry: impl FnMut(usize, usize) -> SParamPoly) -> Self {
        let rows = (0..=order)
            .map(|n| (0..=n).map(|k| entry(n, k)).collect())
            .collect();
        Self { rows }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |n, k| {
            if n == k {
                SParamPoly::from_int(1)
            } else {
                SParamPoly::zero()
            }
        })
    }

    /// Largest row index `N`.
    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<SParamPoly>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[SParamPoly] {
        &self.rows[n]
    }

    /// `s_{n,k}`, zero outside the triangle.
    pub fn get(&self, n: usize, k: usize) -> SParamPoly {
        self.rows
            .get(n)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_default()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self {
            rows: self.rows[..=order.min(self.order())].to_vec(),
        }
    }

    /// Matrix product, both factors truncated to the smaller order.
    pub fn matmul(&self, other: &Triangle) -> Triangle {
        let order = self.order().min(other.order());
        Self::from_fn(order, |n, k| {
            (k..=n).fold(SParamPoly::zero(), |acc, j| {
                &acc + &(&self.rows[n][j] * &other.rows[j][k])
            })
        })
    }

    pub fn substitute_s(&self, at: &SParamPoly) -> Self {
        Self {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|c| c.compose(at)).collect())
                .collect(),
        }
    }

    /// Row polynomial `s_n(t)` evaluated at rational `t`.
    pub fn row_poly_eval(&self, n: usize, t: &Rational) -> SParamPoly {
        self.rows[n]
            .iter()
            .rev()
            .fold(SParamPoly::zero(), |acc, c| &acc.scale(t) + c)
    }

    /// One line per row, entries comma-separated. Rational entries print as
    /// `p/q`; entries that still depend on `s` print as a quoted polynomial.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(SParamPoly::csv_cell).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Triangle {
        Triangle::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| SParamPoly::from_int(c)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn shape_is_validated() {
        assert!(Triangle::from_rows(vec![vec![SParamPoly::from_int(1)], vec![]]).is_err());
        let bad = r#"{"N":2,"rows":[["1"]]}"#;
        assert!(serde_json::from_str::<Triangle>(bad).is_err());
    }

    #[test]
    fn pascal_inverse_by_matmul() {
        let pascal = ints(&[&[1], &[1, 1], &[1, 2, 1]]);
        let inv = ints(&[&[1], &[-1, 1], &[1, -2, 1]]);
        assert_eq!(pascal.matmul(&inv), Triangle::identity(2));
    }

    #[test]
    fn json_and_csv() {
        let t = ints(&[&[1], &[0, 1]]);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"{"N":1,"rows":[[["1"]],[[],["1"]]]}"#);
        assert_eq!(serde_json::from_str::<Triangle>(&json).unwrap(), t);
        assert_eq!(t.to_csv(), "1\n0,1\n");
    }
}
