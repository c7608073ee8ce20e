//! Strictly increasing grids of entropic indices.
//!
//! Grids are written as comma-separated items, each either a single value or
//! an inclusive `start:stop:step` range, for example `0:2:0.1,2.2:4:0.2,4.5`.
//! Range points are generated on an exact decimal lattice, so `0:1:0.1` yields
//! the same doubles as writing `0,0.1,...,1` out by hand.

use std::fmt;
use std::str::FromStr;

use crate::entropy::EntropicIndex;
use crate::error::{Error, Result};

/// Grid used by the published sweep: 0 to 2 by 0.1, 2.2 to 4 by 0.2, then
/// 4.5 to 10 by 0.5.
pub const DEFAULT_GRID_SPEC: &str = "0:2:0.1,2.2:4:0.2,4.5:10:0.5";

#[derive(Debug, Clone, PartialEq)]
pub struct QGrid(Vec<f64>);

impl QGrid {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyGrid);
        }
        for &v in &values {
            EntropicIndex::new(v)?;
        }
        if let Some(w) = values.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::GridNotIncreasing {
                prev: w[0],
                next: w[1],
            });
        }
        Ok(QGrid(values))
    }

    pub fn default_grid() -> Self {
        DEFAULT_GRID_SPEC
            .parse()
            .expect("default grid spec is valid")
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, q: f64) -> bool {
        self.position(q).is_some()
    }

    pub fn position(&self, q: f64) -> Option<usize> {
        self.0.iter().position(|&v| v == q)
    }

    pub fn indices(&self) -> impl Iterator<Item = EntropicIndex> + '_ {
        self.0
            .iter()
            .map(|&v| EntropicIndex::new(v).expect("validated"))
    }
}

impl FromStr for QGrid {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let err = |message: String| Error::GridSpec {
            spec: spec.to_owned(),
            message,
        };
        let mut values = Vec::new();
        for item in spec.split(',') {
            let item = item.trim();
            if item.is_empty() {
                return Err(err("empty item".into()));
            }
            let parts: Vec<&str> = item.split(':').map(str::trim).collect();
            match parts.as_slice() {
                [single] => values.push(Decimal::parse(single).map_err(err)?.to_f64()),
                [start, stop, step] => {
                    let start = Decimal::parse(start).map_err(err)?;
                    let stop = Decimal::parse(stop).map_err(err)?;
                    let step = Decimal::parse(step).map_err(err)?;
                    let scale = start.scale.max(stop.scale).max(step.scale);
                    let (a, b, s) = (start.at(scale), stop.at(scale), step.at(scale));
                    if s <= 0 {
                        return Err(err(format!("step in `{item}` must be positive")));
                    }
                    if b < a {
                        return Err(err(format!("range `{item}` runs backwards")));
                    }
                    let denom = 10f64.powi(scale as i32);
                    let mut k = a;
                    while k <= b {
                        values.push(k as f64 / denom);
                        k += s;
                    }
                }
                _ => {
                    return Err(err(format!(
                        "`{item}` is neither a value nor start:stop:step"
                    )))
                }
            }
        }
        QGrid::new(values).map_err(|e| match e {
            Error::GridSpec { .. } => e,
            other => err(other.to_string()),
        })
    }
}

impl fmt::Display for QGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A non-negative decimal literal held as `mantissa / 10^scale`.
#[derive(Debug, Clone, Copy)]
struct Decimal {
    mantissa: i64,
    scale: u32,
}

impl Decimal {
    const MAX_SCALE: u32 = 9;

    fn parse(text: &str) -> std::result::Result<Self, String> {
        let bad = || format!("`{text}` is not a non-negative decimal number");
        let (int_part, frac_part) = match text.split_once('.') {
            Some((i, f)) => (i, f),
            None => (text, ""),
        };
        let digits_only = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
        if (int_part.is_empty() && frac_part.is_empty())
            || !digits_only(int_part)
            || !digits_only(frac_part)
        {
            return Err(bad());
        }
        let frac_part = frac_part.trim_end_matches('0');
        let scale = frac_part.len() as u32;
        if scale > Self::MAX_SCALE {
            return Err(format!(
                "`{text}` has more than {} decimals",
                Self::MAX_SCALE
            ));
        }
        let joined = format!("{int_part}{frac_part}");
        let mantissa = if joined.is_empty() {
            0
        } else {
            joined.parse::<i64>().map_err(|_| bad())?
        };
        Ok(Decimal { mantissa, scale })
    }

    fn at(self, scale: u32) -> i64 {
        self.mantissa * 10i64.pow(scale - self.scale)
    }

    fn to_f64(self) -> f64 {
        self.mantissa as f64 / 10f64.powi(self.scale as i32)
    }
}
