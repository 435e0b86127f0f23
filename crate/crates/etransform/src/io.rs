//! File formats for grid data, spectra and dense evaluation tables.
//!
//! Grid data: `{"group", "M", "points": [[s1,s2],…], "values": [[re,im],…]}`
//! with points as integer numerators over M. Spectra: `{"group", "M",
//! "labels": [[a,b],…], "coeffs": [[re,im],…]}`. Numbers are written with
//! 17 significant digits so doubles survive a round trip.

use std::fmt::Write as _;

use num_complex::Complex;
use serde::Deserialize;

use crate::cartan::GroupId;
use crate::error::{Error, Result};
use crate::transform_disc::{Grid, Spectrum};
use crate::weyl::Weight;

/// 17 significant digits in exponent notation.
pub fn fmt_f64(x: f64) -> Result<String> {
    if !x.is_finite() {
        return Err(Error::Data(format!("cannot write non-finite value {x}")));
    }
    Ok(format!("{x:.16e}"))
}

fn fmt_pair(z: Complex<f64>) -> Result<String> {
    Ok(format!("[{}, {}]", fmt_f64(z.re)?, fmt_f64(z.im)?))
}

fn int_pairs(v: &[[i64; 2]]) -> String {
    v.iter().map(|p| format!("[{}, {}]", p[0], p[1])).collect::<Vec<_>>().join(", ")
}

fn complex_pairs(v: &[Complex<f64>]) -> Result<String> {
    Ok(v.iter().map(|z| fmt_pair(*z)).collect::<Result<Vec<_>>>()?.join(", "))
}

#[derive(Deserialize)]
struct RawGrid {
    group: String,
    #[serde(rename = "M", alias = "m")]
    m: i64,
    points: Vec<[i64; 2]>,
    values: Vec<[f64; 2]>,
}

#[derive(Deserialize)]
struct RawSpectrum {
    group: String,
    #[serde(rename = "M", alias = "m")]
    m: i64,
    labels: Vec<[i64; 2]>,
    coeffs: Vec<[f64; 2]>,
}

fn complexes(v: &[[f64; 2]]) -> Vec<Complex<f64>> {
    v.iter().map(|p| Complex::new(p[0], p[1])).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct GridFile {
    pub group: GroupId,
    pub m: i64,
    pub points: Vec<[i64; 2]>,
    pub values: Vec<Complex<f64>>,
}

impl GridFile {
    pub fn from_grid(grid: &Grid, values: &[Complex<f64>]) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::LengthMismatch { expected: grid.len(), got: values.len() });
        }
        Ok(GridFile { group: grid.group, m: grid.m, points: grid.points.clone(), values: values.to_vec() })
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = String::new();
        writeln!(s, "{{").unwrap();
        writeln!(s, "  \"group\": \"{}\",", self.group.name()).unwrap();
        writeln!(s, "  \"M\": {},", self.m).unwrap();
        writeln!(s, "  \"points\": [{}],", int_pairs(&self.points)).unwrap();
        writeln!(s, "  \"values\": [{}]", complex_pairs(&self.values)?).unwrap();
        writeln!(s, "}}").unwrap();
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawGrid = serde_json::from_str(text).map_err(|e| Error::Data(format!("malformed grid file: {e}")))?;
        let group: GroupId = raw.group.parse()?;
        if raw.points.len() != raw.values.len() {
            return Err(Error::Data(format!("{} points but {} values", raw.points.len(), raw.values.len())));
        }
        Ok(GridFile { group, m: raw.m, points: raw.points, values: complexes(&raw.values) })
    }

    /// Values in the order of `grid.points`. The file must list exactly the
    /// grid's points, in any order.
    pub fn values_on(&self, grid: &Grid) -> Result<Vec<Complex<f64>>> {
        if self.group != grid.group || self.m != grid.m {
            return Err(Error::Data(format!(
                "file holds {} data with M={}, expected {} with M={}",
                self.group, self.m, grid.group, grid.m
            )));
        }
        if self.points.len() != grid.len() {
            return Err(Error::Data(format!("file has {} points, the grid has {}", self.points.len(), grid.len())));
        }
        let mut out = vec![None; grid.len()];
        for (p, v) in self.points.iter().zip(&self.values) {
            let i = grid.index_of(*p).ok_or_else(|| Error::Data(format!("point {p:?} is not on the grid")))?;
            if out[i].replace(*v).is_some() {
                return Err(Error::Data(format!("point {p:?} listed twice")));
            }
        }
        Ok(out.into_iter().map(|v| v.expect("every grid point seen")).collect())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumFile {
    pub group: GroupId,
    pub m: i64,
    pub labels: Vec<[i64; 2]>,
    pub coeffs: Vec<Complex<f64>>,
}

impl SpectrumFile {
    pub fn from_spectrum(s: &Spectrum<f64>) -> Self {
        SpectrumFile {
            group: s.group,
            m: s.m,
            labels: s.entries.iter().map(|(l, _)| l.coords).collect(),
            coeffs: s.entries.iter().map(|(_, c)| *c).collect(),
        }
    }

    pub fn to_spectrum(&self) -> Result<Spectrum<f64>> {
        let mut entries: Vec<(Weight, Complex<f64>)> =
            self.labels.iter().zip(&self.coeffs).map(|(l, c)| (Weight { group: self.group, coords: *l }, *c)).collect();
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        if entries.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::Data("spectrum lists a label twice".into()));
        }
        Ok(Spectrum { group: self.group, m: self.m, entries })
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = String::new();
        writeln!(s, "{{").unwrap();
        writeln!(s, "  \"group\": \"{}\",", self.group.name()).unwrap();
        writeln!(s, "  \"M\": {},", self.m).unwrap();
        writeln!(s, "  \"labels\": [{}],", int_pairs(&self.labels)).unwrap();
        writeln!(s, "  \"coeffs\": [{}]", complex_pairs(&self.coeffs)?).unwrap();
        writeln!(s, "}}").unwrap();
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawSpectrum = serde_json::from_str(text).map_err(|e| Error::Data(format!("malformed spectrum file: {e}")))?;
        let group: GroupId = raw.group.parse()?;
        if raw.labels.len() != raw.coeffs.len() {
            return Err(Error::Data(format!("{} labels but {} coefficients", raw.labels.len(), raw.coeffs.len())));
        }
        Ok(SpectrumFile { group, m: raw.m, labels: raw.labels, coeffs: complexes(&raw.coeffs) })
    }
}

/// One row of a dense evaluation table.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Row {
    pub x: f64,
    pub y: f64,
    pub value: Complex<f64>,
}

pub fn table_csv(rows: &[Row]) -> Result<String> {
    let mut s = String::from("x,y,re,im\n");
    for r in rows {
        writeln!(s, "{},{},{},{}", fmt_f64(r.x)?, fmt_f64(r.y)?, fmt_f64(r.value.re)?, fmt_f64(r.value.im)?).unwrap();
    }
    Ok(s)
}

pub fn table_json(rows: &[Row]) -> Result<String> {
    let body = rows
        .iter()
        .map(|r| {
            Ok(format!(
                "  {{\"x\": {}, \"y\": {}, \"re\": {}, \"im\": {}}}",
                fmt_f64(r.x)?,
                fmt_f64(r.y)?,
                fmt_f64(r.value.re)?,
                fmt_f64(r.value.im)?
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(format!("[\n{}\n]\n", body.join(",\n")))
}
