//! A bundle of measures for one word, serializable to JSON and TSV.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::attractors::{is_attractor, AttractorSet};
use crate::complexity::profile;
use crate::error::{domain, Error, Result};
use crate::factorizations::{bwt_runs, lyndon_factorize, lz_size};
use crate::rational::Rational;
use crate::words::{thue_morse_index_of, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    Delta,
    Z,
    R,
    Lyndon,
    Profile,
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "delta" => Measure::Delta,
            "z" => Measure::Z,
            "r" => Measure::R,
            "lyndon" => Measure::Lyndon,
            "profile" => Measure::Profile,
            other => return Err(domain(format!("unknown measure {other:?}"))),
        })
    }
}

/// Which measures a report computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeasureSelection {
    pub delta: bool,
    pub z: bool,
    pub r: bool,
    pub lyndon: bool,
    pub profile: bool,
}

impl MeasureSelection {
    /// δ, z, r and ℓ; the profile is opt-in.
    pub fn standard() -> Self {
        MeasureSelection { delta: true, z: true, r: true, lyndon: true, profile: false }
    }

    /// Parses a comma list such as `delta,z,profile`.
    pub fn parse_list(list: &str) -> Result<Self> {
        let mut sel = MeasureSelection { delta: false, z: false, r: false, lyndon: false, profile: false };
        for item in list.split(',').filter(|s| !s.trim().is_empty()) {
            match item.parse()? {
                Measure::Delta => sel.delta = true,
                Measure::Z => sel.z = true,
                Measure::R => sel.r = true,
                Measure::Lyndon => sel.lyndon = true,
                Measure::Profile => sel.profile = true,
            }
        }
        Ok(sel)
    }
}

impl Default for MeasureSelection {
    fn default() -> Self {
        Self::standard()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasureReport {
    /// Set when the word is exactly `t_n`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub word_length: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Rational>,
    /// δ rounded to 6 decimal places; approximate, for humans.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta_approx: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lyndon: Option<usize>,
    /// ⌈δ⌉.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma_lower: Option<usize>,
    /// Size of a verified attractor.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma_upper: Option<usize>,
    /// `P(1), P(2), ..., P(|w|)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<Vec<u64>>,
}

impl MeasureReport {
    /// Computes the selected measures. A supplied attractor must verify;
    /// its size becomes `gamma_upper`.
    pub fn compute(w: &Word, sel: MeasureSelection, attractor: Option<&AttractorSet>) -> Result<Self> {
        if w.is_empty() {
            return Err(domain("cannot measure the empty word"));
        }
        let mut report = MeasureReport {
            n: thue_morse_index_of(w),
            word_length: w.len(),
            delta: None,
            delta_approx: None,
            z: None,
            r: None,
            lyndon: None,
            gamma_lower: None,
            gamma_upper: None,
            profile: None,
        };
        if sel.delta || sel.profile {
            let p = profile(w)?;
            if sel.delta {
                report.delta_approx = Some(p.delta.to_decimal(6));
                report.gamma_lower = Some(p.delta.ceil().try_into().expect("δ <= |w|"));
                report.delta = Some(p.delta);
            }
            if sel.profile {
                report.profile = Some(p.counts);
            }
        }
        if sel.z {
            report.z = Some(lz_size(w)?);
        }
        if sel.r {
            report.r = Some(bwt_runs(w)?);
        }
        if sel.lyndon {
            report.lyndon = Some(lyndon_factorize(w)?.len());
        }
        if let Some(gamma) = attractor {
            let check = is_attractor(w, gamma)?;
            if !check.is_attractor {
                return Err(domain(format!(
                    "supplied positions are not an attractor: {} is uncovered",
                    check.certificate.map(|c| c.to_string()).unwrap_or_default()
                )));
            }
            report.gamma_upper = Some(gamma.len());
        }
        report.check_consistency().map_err(domain)?;
        Ok(report)
    }

    /// Checks `⌈δ⌉ <= γ_upper` and `⌈δ⌉ <= z, r` for whatever is present.
    pub fn check_consistency(&self) -> std::result::Result<(), String> {
        let Some(delta) = &self.delta else {
            return Ok(());
        };
        let lower = self.gamma_lower.ok_or("delta present without gamma_lower")?;
        if Rational::from(lower as u64) < *delta || Rational::from(lower as u64 - 1) >= *delta {
            return Err(format!("gamma_lower {lower} is not the ceiling of {delta}"));
        }
        for (name, v) in [("z", self.z), ("r", self.r), ("gamma_upper", self.gamma_upper)] {
            if let Some(v) = v {
                if v < lower {
                    return Err(format!("{name} = {v} is below the lower bound {lower}"));
                }
            }
        }
        Ok(())
    }

    pub const TSV_HEADER: &'static str = "n\tlength\tdelta\tz\tr\tlyndon\tgamma_lower\tgamma_upper";

    /// One TSV row in [`Self::TSV_HEADER`] order; absent values are `-`.
    pub fn tsv_row(&self) -> String {
        fn cell<T: fmt::Display>(v: &Option<T>) -> String {
            v.as_ref().map_or_else(|| "-".to_owned(), T::to_string)
        }
        [
            cell(&self.n),
            self.word_length.to_string(),
            cell(&self.delta),
            cell(&self.z),
            cell(&self.r),
            cell(&self.lyndon),
            cell(&self.gamma_lower),
            cell(&self.gamma_upper),
        ]
        .join("\t")
    }
}
