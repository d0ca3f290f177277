//! Bundle spec files.
//!
//! ```text
//! # comment
//! field = R            # R, C or H
//! rank = 3             # n + 1
//!
//! [base]               # omit for a point
//! generators = x:1, y:2
//! relations = x^4, y^2
//! coeffs = f2          # f2 or z; defaults to f2 for R and z otherwise
//! truncation = 6       # everything above this degree vanishes
//! dim = 6              # dimension bound for the base
//! strategy = tower     # tower or groebner
//!
//! [classes]            # w_i (Stiefel-Whitney or Chern); missing ones are 0
//! w1 = x
//! w2 = x^2 + y
//!
//! [options]
//! kmax = 12
//! coeffs = z           # coefficients for the ordered pair criterion
//! ```

use std::collections::BTreeMap;

use thiserror::Error;

use crate::bundles::{BundleError, BundleSpec, Field};
use crate::poly::{parse, CoefficientRing, Generator, PolyRing, Polynomial};
use crate::ring::{RingPresentation, Strategy};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct SpecError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> SpecError {
    SpecError {
        line,
        message: message.into(),
    }
}

/// A parsed spec file.
#[derive(Debug, Clone)]
pub struct SpecFile {
    pub bundle: BundleSpec,
    pub k_max: Option<u32>,
    pub pair_coeffs: Option<CoefficientRing>,
}

#[derive(Default)]
struct Section {
    entries: BTreeMap<String, (usize, String)>,
}

impl Section {
    fn take(&mut self, key: &str) -> Option<(usize, String)> {
        self.entries.remove(key)
    }
}

fn split_list(value: &str) -> Vec<&str> {
    value.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}

fn parse_number(line: usize, key: &str, value: &str) -> Result<u32, SpecError> {
    value
        .parse()
        .map_err(|_| err(line, format!("`{key}` must be a non-negative integer, got `{value}`")))
}

fn parse_coeffs(line: usize, value: &str) -> Result<CoefficientRing, SpecError> {
    match value.to_ascii_lowercase().as_str() {
        "f2" => Ok(CoefficientRing::F2),
        "z" => Ok(CoefficientRing::Integers),
        other => Err(err(line, format!("unknown coefficients `{other}` (expected f2 or z)"))),
    }
}

pub fn parse_coefficients(value: &str) -> Option<CoefficientRing> {
    parse_coeffs(0, value).ok()
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<SpecFile, SpecError> {
        let mut sections: BTreeMap<String, Section> = BTreeMap::new();
        let mut current = String::new();
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            last_line = line;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some(name) = content.strip_prefix('[') {
                let name = name
                    .strip_suffix(']')
                    .ok_or_else(|| err(line, "unterminated section header"))?
                    .trim();
                if !matches!(name, "base" | "classes" | "options") {
                    return Err(err(line, format!("unknown section `[{name}]`")));
                }
                if sections.contains_key(name) {
                    return Err(err(line, format!("section `[{name}]` appears twice")));
                }
                current = name.to_string();
                sections.entry(current.clone()).or_default();
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| err(line, "expected `key = value`"))?;
            let key = key.trim().to_string();
            let section = sections.entry(current.clone()).or_default();
            if section.entries.contains_key(&key) {
                return Err(err(line, format!("duplicate key `{key}`")));
            }
            section.entries.insert(key, (line, value.trim().to_string()));
        }

        let mut top = sections.remove("").unwrap_or_default();
        let (fl, field) = top.take("field").ok_or_else(|| err(last_line, "missing `field`"))?;
        let field = match field.to_ascii_uppercase().as_str() {
            "R" => Field::R,
            "C" => Field::C,
            "H" => Field::H,
            other => return Err(err(fl, format!("unknown field `{other}` (expected R, C or H)"))),
        };
        let (rl, rank) = top.take("rank").ok_or_else(|| err(last_line, "missing `rank`"))?;
        let rank = parse_number(rl, "rank", &rank)?;
        if let Some((key, (line, _))) = top.entries.into_iter().next() {
            return Err(err(line, format!("unknown key `{key}`")));
        }

        let mut base = sections.remove("base").unwrap_or_default();
        let default_coeffs = if field == Field::R {
            CoefficientRing::F2
        } else {
            CoefficientRing::Integers
        };
        let coeffs = match base.take("coeffs") {
            Some((l, v)) => parse_coeffs(l, &v)?,
            None => default_coeffs,
        };
        let mut gens = Vec::new();
        let gen_line = base.entries.get("generators").map(|e| e.0).unwrap_or(0);
        if let Some((l, v)) = base.take("generators") {
            for item in split_list(&v) {
                let (name, deg) = item
                    .split_once(':')
                    .ok_or_else(|| err(l, format!("generator `{item}` needs a degree, as in `x:1`")))?;
                let deg = parse_number(l, "degree", deg.trim())?;
                gens.push(Generator::new(name.trim(), deg));
            }
        }
        let ring = PolyRing::new(coeffs, gens).map_err(|e| err(gen_line, e.to_string()))?;
        let mut relations = Vec::new();
        let rel_line = base.entries.get("relations").map(|e| e.0).unwrap_or(gen_line);
        if let Some((l, v)) = base.take("relations") {
            for item in split_list(&v) {
                relations.push(parse(item, &ring).map_err(|e| err(l, format!("in `{item}`: {e}")))?);
            }
        }
        let truncation = match base.take("truncation") {
            Some((l, v)) => Some(parse_number(l, "truncation", &v)?),
            None => None,
        };
        let dim = match base.take("dim") {
            Some((l, v)) => Some(parse_number(l, "dim", &v)?),
            None => None,
        };
        let strategy = match base.take("strategy") {
            Some((l, v)) => match v.as_str() {
                "tower" => Some(Strategy::MonicTower),
                "groebner" => Some(Strategy::GroebnerF2),
                other => return Err(err(l, format!("unknown strategy `{other}` (expected tower or groebner)"))),
            },
            None => None,
        };
        if let Some((key, (line, _))) = base.entries.into_iter().next() {
            return Err(err(line, format!("unknown key `{key}` in [base]")));
        }
        let pres = match strategy {
            Some(s) => RingPresentation::new(ring, relations, s, truncation),
            None => RingPresentation::new(ring.clone(), relations.clone(), Strategy::MonicTower, truncation).or_else(
                |tower_err| {
                    if coeffs == CoefficientRing::F2 && truncation.is_some() {
                        RingPresentation::new(ring, relations, Strategy::GroebnerF2, truncation)
                    } else {
                        Err(tower_err)
                    }
                },
            ),
        }
        .map_err(|e| err(rel_line, e.to_string()))?;

        let mut classes_section = sections.remove("classes").unwrap_or_default();
        let mut classes = vec![Polynomial::zero(pres.poly_ring()); rank as usize];
        let mut class_line = 0;
        for i in 1..=rank as usize {
            if let Some((l, v)) = classes_section.take(&format!("w{i}")) {
                class_line = class_line.max(l);
                classes[i - 1] = parse(&v, pres.poly_ring()).map_err(|e| err(l, format!("in w{i}: {e}")))?;
            }
        }
        if let Some((key, (line, _))) = classes_section.entries.into_iter().next() {
            return Err(err(line, format!("unknown class `{key}` (expected w1..w{rank})")));
        }

        let mut options = sections.remove("options").unwrap_or_default();
        let k_max = match options.take("kmax") {
            Some((l, v)) => Some(parse_number(l, "kmax", &v)?),
            None => None,
        };
        let pair_coeffs = match options.take("coeffs") {
            Some((l, v)) => Some(parse_coeffs(l, &v)?),
            None => None,
        };
        if let Some((key, (line, _))) = options.entries.into_iter().next() {
            return Err(err(line, format!("unknown key `{key}` in [options]")));
        }

        let bundle = BundleSpec::new(field, rank, pres, classes, dim).map_err(|e| {
            let line = match &e {
                BundleError::ClassDegree { .. } => class_line,
                BundleError::RankTooSmall(_) => rl,
                BundleError::CoefficientMismatch { .. } => fl,
                _ => rel_line.max(class_line),
            };
            err(line, e.to_string())
        })?;
        Ok(SpecFile {
            bundle,
            k_max,
            pair_coeffs,
        })
    }
}
