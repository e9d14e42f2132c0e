//! Serialization of truncated series: JSON, CSV and ascending-power text.

use std::fmt::Write as _;

use anyhow::{bail, Context as _};
use qcert_core::{CoeffRing, QSeries, Rat};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coefficient {
    pub q_exponent: usize,
    /// Exact value, `a` or `a/b`; reduced to `0..p` under a mod-p view.
    pub coefficient: String,
}

/// A series known exactly through `q^order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDoc {
    pub form: String,
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u64>,
    pub coefficients: Vec<Coefficient>,
}

impl SeriesDoc {
    pub fn exact(form: &str, s: &QSeries<Rat>) -> Self {
        SeriesDoc {
            form: form.into(),
            order: s.order(),
            modulus: None,
            coefficients: s
                .coeffs()
                .iter()
                .enumerate()
                .map(|(n, c)| Coefficient {
                    q_exponent: n,
                    coefficient: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn reduced(form: &str, s: &QSeries<Rat>, p: u64) -> anyhow::Result<Self> {
        let values = s.reduce_mod(p)?;
        Ok(SeriesDoc {
            form: form.into(),
            order: s.order(),
            modulus: Some(p),
            coefficients: values
                .into_iter()
                .enumerate()
                .map(|(n, c)| Coefficient {
                    q_exponent: n,
                    coefficient: c.to_string(),
                })
                .collect(),
        })
    }

    /// Rebuilds the series; exponents must be `0..=order` without gaps.
    pub fn to_series(&self) -> anyhow::Result<QSeries<Rat>> {
        let mut coeffs = vec![Rat::zero(); self.order + 1];
        let mut seen = vec![false; self.order + 1];
        for c in &self.coefficients {
            if c.q_exponent > self.order || seen[c.q_exponent] {
                bail!("bad or repeated exponent {}", c.q_exponent);
            }
            seen[c.q_exponent] = true;
            coeffs[c.q_exponent] = c
                .coefficient
                .parse()
                .with_context(|| format!("bad coefficient `{}`", c.coefficient))?;
        }
        if seen.contains(&false) {
            bail!("missing coefficients");
        }
        Ok(QSeries::from_coeffs(coeffs))
    }

    pub fn to_json(&self) -> anyhow::Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn to_csv(&self) -> anyhow::Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for c in &self.coefficients {
            w.serialize(c)?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }

    /// `1 + 2q + 4q^2 + ... (exact through q^2)`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.coefficients {
            let v = c.coefficient.as_str();
            if v == "0" {
                continue;
            }
            let (neg, mag) = match v.strip_prefix('-') {
                Some(m) => (true, m),
                None => (false, v),
            };
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mag = if mag.contains('/') && c.q_exponent > 0 {
                format!("({mag})")
            } else {
                mag.to_string()
            };
            match (c.q_exponent, mag.as_str()) {
                (0, m) => s.push_str(m),
                (1, "1") => s.push('q'),
                (1, m) => {
                    let _ = write!(s, "{m}q");
                }
                (e, "1") => {
                    let _ = write!(s, "q^{e}");
                }
                (e, m) => {
                    let _ = write!(s, "{m}q^{e}");
                }
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        let _ = write!(s, " + ... (exact through q^{})", self.order);
        if let Some(p) = self.modulus {
            let _ = write!(s, " mod {p}");
        }
        s
    }

    pub fn render(&self, format: Format) -> anyhow::Result<String> {
        match format {
            Format::Text => Ok(self.to_text() + "\n"),
            Format::Json => Ok(self.to_json()? + "\n"),
            Format::Csv => self.to_csv(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn text_notation() {
        let s = QSeries::from_ints(&[1, -2, 0, 1, 14]);
        assert_eq!(
            SeriesDoc::exact("f", &s).to_text(),
            "1 - 2q + q^3 + 14q^4 + ... (exact through q^4)"
        );
        let z: QSeries<Rat> = QSeries::zero(2);
        assert_eq!(
            SeriesDoc::exact("f", &z).to_text(),
            "0 + ... (exact through q^2)"
        );
        let h = QSeries::from_coeffs(vec![Rat::new(-1, 2), Rat::new(3, 4)]);
        assert_eq!(
            SeriesDoc::exact("f", &h).to_text(),
            "-1/2 + (3/4)q + ... (exact through q^1)"
        );
    }

    #[test]
    fn csv_has_header() {
        let s = QSeries::from_ints(&[1, 2]);
        assert_eq!(
            SeriesDoc::exact("f", &s).to_csv().unwrap(),
            "q_exponent,coefficient\n0,1\n1,2\n"
        );
    }

    #[test]
    fn mod_view_matches_reduction() {
        let s = QSeries::from_ints(&[-5, 7, 13]);
        let d = SeriesDoc::reduced("f", &s, 5).unwrap();
        let got: Vec<&str> = d
            .coefficients
            .iter()
            .map(|c| c.coefficient.as_str())
            .collect();
        assert_eq!(got, ["0", "2", "3"]);
    }

    #[test]
    fn gaps_are_rejected() {
        let mut d = SeriesDoc::exact("f", &QSeries::from_ints(&[1, 2, 3]));
        d.coefficients.remove(1);
        assert!(d.to_series().is_err());
    }

    proptest! {
        #[test]
        fn json_round_trip(nums in proptest::collection::vec((-1000i64..1000, 1i64..50), 1..20)) {
            let s = QSeries::from_coeffs(nums.iter().map(|&(a, b)| Rat::new(a, b)).collect());
            let doc = SeriesDoc::exact("x", &s);
            let back: SeriesDoc = serde_json::from_str(&doc.to_json().unwrap()).unwrap();
            prop_assert_eq!(&back, &doc);
            prop_assert_eq!(back.to_series().unwrap(), s);
        }
    }
}
