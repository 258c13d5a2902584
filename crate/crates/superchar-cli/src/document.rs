//! JSON interchange format for matrices and parameter vectors.
//!
//! A document records the modulus it was generated from, a `kind` tag naming
//! the object, and an entry grid in one of three modes: plain floats, exact
//! values `a + b*sqrt(2)`, or complex numbers.  CSV output is available for
//! the real-valued modes only.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use superchar::matrix::Matrix;
use superchar::ExactQuadratic;

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq)]
#[serde(untagged)]
pub enum Entry {
    Float(f64),
    Exact { a: i64, b: i64 },
    Complex { re: f64, im: f64 },
}

impl Entry {
    pub fn to_complex(self) -> Complex64 {
        match self {
            Entry::Float(x) => Complex64::new(x, 0.0),
            Entry::Exact { a, b } => ExactQuadratic::new(a, b).to_complex(),
            Entry::Complex { re, im } => Complex64::new(re, im),
        }
    }

    fn to_real(self) -> Option<f64> {
        match self {
            Entry::Float(x) => Some(x),
            Entry::Exact { a, b } => Some(ExactQuadratic::new(a, b).to_f64()),
            Entry::Complex { .. } => None,
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct MatrixDocument {
    pub n: u64,
    pub kind: String,
    pub rows: usize,
    pub cols: usize,
    pub entry_mode: String,
    pub entries: Vec<Vec<Entry>>,
}

impl MatrixDocument {
    pub fn from_f64(n: u64, kind: &str, m: &Matrix<f64>) -> Self {
        MatrixDocument {
            n,
            kind: kind.to_string(),
            rows: m.rows(),
            cols: m.cols(),
            entry_mode: "float".to_string(),
            entries: (0..m.rows())
                .map(|r| m.row(r).iter().map(|&x| Entry::Float(x)).collect())
                .collect(),
        }
    }

    pub fn from_exact(n: u64, kind: &str, m: &Matrix<ExactQuadratic>) -> Self {
        MatrixDocument {
            n,
            kind: kind.to_string(),
            rows: m.rows(),
            cols: m.cols(),
            entry_mode: "exact".to_string(),
            entries: (0..m.rows())
                .map(|r| m.row(r).iter().map(|e| Entry::Exact { a: e.a, b: e.b }).collect())
                .collect(),
        }
    }

    pub fn from_complex(n: u64, kind: &str, m: &Matrix<Complex64>) -> Self {
        MatrixDocument {
            n,
            kind: kind.to_string(),
            rows: m.rows(),
            cols: m.cols(),
            entry_mode: "complex".to_string(),
            entries: (0..m.rows())
                .map(|r| m.row(r).iter().map(|z| Entry::Complex { re: z.re, im: z.im }).collect())
                .collect(),
        }
    }

    pub fn row_vector(n: u64, kind: &str, values: &[Complex64]) -> Self {
        MatrixDocument {
            n,
            kind: kind.to_string(),
            rows: 1,
            cols: values.len(),
            entry_mode: "complex".to_string(),
            entries: vec![values.iter().map(|z| Entry::Complex { re: z.re, im: z.im }).collect()],
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.entries.len() != self.rows {
            return Err(format!(
                "document declares {} rows but carries {}",
                self.rows,
                self.entries.len()
            ));
        }
        for (r, row) in self.entries.iter().enumerate() {
            if row.len() != self.cols {
                return Err(format!(
                    "row {} has {} entries, expected {}",
                    r,
                    row.len(),
                    self.cols
                ));
            }
        }
        Ok(())
    }

    pub fn to_complex_matrix(&self) -> Result<Matrix<Complex64>, String> {
        self.validate()?;
        let rows: Vec<Vec<Complex64>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.to_complex()).collect())
            .collect();
        Ok(Matrix::from_rows(&rows))
    }

    pub fn to_complex_vector(&self) -> Result<Vec<Complex64>, String> {
        self.validate()?;
        if self.rows != 1 {
            return Err(format!("expected a 1-row vector document, got {} rows", self.rows));
        }
        Ok(self.entries[0].iter().map(|e| e.to_complex()).collect())
    }

    /// Comma-separated values, one matrix row per line.  Refuses complex
    /// entries: CSV carries no imaginary part.
    pub fn to_csv(&self) -> Result<String, String> {
        self.validate()?;
        let mut out = String::new();
        for row in &self.entries {
            let cells: Result<Vec<String>, String> = row
                .iter()
                .map(|e| {
                    e.to_real()
                        .map(|x| format!("{x:.16e}"))
                        .ok_or_else(|| "complex entries cannot be written as CSV".to_string())
                })
                .collect();
            out.push_str(&cells?.join(","));
            out.push('\n');
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entry_modes_round_trip_through_json() {
        let doc = MatrixDocument {
            n: 7,
            kind: "demo".to_string(),
            rows: 2,
            cols: 2,
            entry_mode: "exact".to_string(),
            entries: vec![
                vec![Entry::Exact { a: 0, b: 1 }, Entry::Float(1.5)],
                vec![Entry::Complex { re: 0.0, im: -1.0 }, Entry::Exact { a: 2, b: 0 }],
            ],
        };
        let text = serde_json::to_string(&doc).unwrap();
        let back: MatrixDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn untagged_entries_deserialize_by_shape() {
        let parsed: Vec<Entry> =
            serde_json::from_str(r#"[2, {"a": 0, "b": 1}, {"re": 1.0, "im": -2.0}]"#).unwrap();
        assert_eq!(
            parsed,
            vec![
                Entry::Float(2.0),
                Entry::Exact { a: 0, b: 1 },
                Entry::Complex { re: 1.0, im: -2.0 },
            ]
        );
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let doc = MatrixDocument {
            n: 4,
            kind: "demo".to_string(),
            rows: 2,
            cols: 2,
            entry_mode: "float".to_string(),
            entries: vec![vec![Entry::Float(1.0)]],
        };
        assert!(doc.validate().is_err());
        let ragged = MatrixDocument {
            entries: vec![vec![Entry::Float(1.0)], vec![Entry::Float(1.0), Entry::Float(2.0)]],
            ..doc
        };
        assert!(ragged.validate().is_err());
    }

    #[test]
    fn csv_covers_real_modes_only() {
        let real = MatrixDocument {
            n: 4,
            kind: "demo".to_string(),
            rows: 1,
            cols: 2,
            entry_mode: "exact".to_string(),
            entries: vec![vec![Entry::Exact { a: 0, b: 1 }, Entry::Float(0.25)]],
        };
        let text = real.to_csv().unwrap();
        assert!(text.starts_with(&format!("{:.16e},", std::f64::consts::SQRT_2)));
        let complex = MatrixDocument {
            entry_mode: "complex".to_string(),
            entries: vec![vec![Entry::Complex { re: 1.0, im: 0.0 }, Entry::Float(0.0)]],
            ..real
        };
        assert!(complex.to_csv().is_err());
    }

    #[test]
    fn complex_matrix_conversion_preserves_values() {
        let doc = MatrixDocument::row_vector(
            5,
            "dct-params",
            &[Complex64::new(1.0, 2.0), Complex64::new(-0.5, 0.0)],
        );
        assert_eq!(doc.rows, 1);
        assert_eq!(doc.cols, 2);
        let v = doc.to_complex_vector().unwrap();
        assert_eq!(v, vec![Complex64::new(1.0, 2.0), Complex64::new(-0.5, 0.0)]);
        let m = doc.to_complex_matrix().unwrap();
        assert_eq!(m[(0, 1)], Complex64::new(-0.5, 0.0));
    }
}
