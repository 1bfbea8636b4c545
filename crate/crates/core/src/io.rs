// Copyright 2026 The qrda Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! File formats: raw/focused images (binary and CSV), statevector dumps,
//! measurement histograms, scene lists, graymaps and filter banks.
//!
//! Binary image layout: `u32` rows, `u32` columns (little endian), then
//! `rows * cols` pairs of `f64` (re, im), little endian, row-major.
//! Statevector layout: one byte `n`, then `2^n` `f64` pairs.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::qsim::{MeasurementHistogram, RegisterLayout, Statevector};
use crate::rda_classical::FilterBank;
use crate::scene_raw::{GroundRect, Scatterer, Scene};
use crate::{Complex64, ComplexImage, Error, Result};

fn read_exact<const N: usize>(r: &mut impl Read) -> Result<[u8; N]> {
    let mut buf = [0u8; N];
    r.read_exact(&mut buf)?;
    Ok(buf)
}

fn write_pairs(w: &mut impl Write, data: &[Complex64]) -> Result<()> {
    for z in data {
        w.write_all(&z.re.to_le_bytes())?;
        w.write_all(&z.im.to_le_bytes())?;
    }
    Ok(())
}

fn read_pairs(r: &mut impl Read, len: usize) -> Result<Vec<Complex64>> {
    (0..len)
        .map(|_| {
            let re = f64::from_le_bytes(read_exact(r)?);
            let im = f64::from_le_bytes(read_exact(r)?);
            Ok(Complex64::new(re, im))
        })
        .collect()
}

fn ensure_eof(r: &mut impl Read) -> Result<()> {
    let mut extra = [0u8; 1];
    if r.read(&mut extra)? != 0 {
        return Err(Error::Parse("trailing bytes after payload".into()));
    }
    Ok(())
}

pub fn write_image_binary(path: impl AsRef<Path>, img: &ComplexImage) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    let d = img.d() as u32;
    w.write_all(&d.to_le_bytes())?;
    w.write_all(&d.to_le_bytes())?;
    write_pairs(&mut w, img.data())?;
    w.flush()?;
    Ok(())
}

pub fn read_image_binary(path: impl AsRef<Path>) -> Result<ComplexImage> {
    let mut r = BufReader::new(File::open(path)?);
    let rows = u32::from_le_bytes(read_exact(&mut r)?) as usize;
    let cols = u32::from_le_bytes(read_exact(&mut r)?) as usize;
    if rows != cols {
        return Err(Error::Parse(format!("image must be square, header says {rows} x {cols}")));
    }
    let data = read_pairs(&mut r, rows * cols)?;
    ensure_eof(&mut r)?;
    ComplexImage::from_vec(rows, data)
}

#[derive(Debug, Serialize, Deserialize)]
struct PixelRecord {
    row: usize,
    col: usize,
    re: f64,
    im: f64,
}

/// One `row,col,re,im` line per pixel, row-major.
pub fn write_image_csv(path: impl AsRef<Path>, img: &ComplexImage) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    let d = img.d();
    for (k, z) in img.data().iter().enumerate() {
        w.serialize(PixelRecord {
            row: k / d,
            col: k % d,
            re: z.re,
            im: z.im,
        })?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_image_csv(path: impl AsRef<Path>) -> Result<ComplexImage> {
    let mut r = csv::Reader::from_path(path)?;
    let records: Vec<PixelRecord> = r.deserialize().collect::<std::result::Result<_, _>>()?;
    let d = (records.len() as f64).sqrt().round() as usize;
    if d * d != records.len() {
        return Err(Error::Parse(format!("{} pixels do not form a square image", records.len())));
    }
    let mut img = ComplexImage::zeros(d)?;
    let mut seen = vec![false; d * d];
    for p in records {
        if p.row >= d || p.col >= d || std::mem::replace(&mut seen[p.row * d + p.col], true) {
            return Err(Error::Parse(format!("pixel ({}, {}) out of range or repeated", p.row, p.col)));
        }
        img.set(p.row, p.col, Complex64::new(p.re, p.im));
    }
    Ok(img)
}

pub fn write_statevector(path: impl AsRef<Path>, state: &Statevector) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(&[state.n() as u8])?;
    write_pairs(&mut w, state.amplitudes())?;
    w.flush()?;
    Ok(())
}

pub fn read_statevector(path: impl AsRef<Path>) -> Result<Statevector> {
    let mut r = BufReader::new(File::open(path)?);
    let [n] = read_exact::<1>(&mut r)?;
    let layout = RegisterLayout::for_qubits(n as usize)?;
    let amps = read_pairs(&mut r, layout.dim())?;
    ensure_eof(&mut r)?;
    Statevector::from_amplitudes(layout, amps)
}

#[derive(Debug, Serialize, Deserialize)]
struct CountRecord {
    index: usize,
    count: u64,
}

/// Observed outcomes only, `index,count`, ascending index.
pub fn write_histogram_csv(path: impl AsRef<Path>, hist: &MeasurementHistogram) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    for (&index, &count) in &hist.counts {
        w.serialize(CountRecord { index, count })?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_histogram_csv(path: impl AsRef<Path>, outcomes: usize) -> Result<MeasurementHistogram> {
    let mut r = csv::Reader::from_path(path)?;
    let mut hist = MeasurementHistogram {
        shots: 0,
        outcomes,
        counts: Default::default(),
    };
    for rec in r.deserialize() {
        let CountRecord { index, count } = rec?;
        if index >= outcomes {
            return Err(Error::Parse(format!("outcome {index} out of range")));
        }
        hist.shots += count;
        *hist.counts.entry(index).or_insert(0) += count;
    }
    Ok(hist)
}

#[derive(Debug, Serialize, Deserialize)]
struct ScatterRecord {
    x: f64,
    y: f64,
    amplitude: f64,
}

pub fn write_scene_csv(path: impl AsRef<Path>, scene: &Scene) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    for s in scene.scatterers() {
        w.serialize(ScatterRecord {
            x: s.x,
            y: s.y,
            amplitude: s.amplitude,
        })?;
    }
    w.flush()?;
    Ok(())
}

/// Reads `x,y,amplitude` rows and validates them against `ground`.
pub fn read_scene_csv(path: impl AsRef<Path>, ground: &GroundRect) -> Result<Scene> {
    let mut r = csv::Reader::from_path(path)?;
    let scatterers = r
        .deserialize()
        .map(|rec| {
            let ScatterRecord { x, y, amplitude } = rec?;
            Ok(Scatterer { x, y, amplitude })
        })
        .collect::<Result<Vec<_>>>()?;
    Scene::new(scatterers, ground)
}

/// Reads a PGM (P2 or P5, 8 or 16 bit) and maps gray levels to amplitudes in
/// `[0, 1]` over the ground rectangle.
pub fn read_scene_pgm(path: impl AsRef<Path>, ground: &GroundRect) -> Result<Scene> {
    let img = image::ImageReader::open(path)?.with_guessed_format()?.decode()?.into_luma16();
    let (w, h) = img.dimensions();
    let intensity: Vec<f64> = img.pixels().map(|p| p.0[0] as f64 / u16::MAX as f64).collect();
    Scene::from_intensities(w as usize, h as usize, &intensity, ground)
}

/// Writes `values` (row-major, `d x d`) as a 16-bit binary PGM, mapping
/// `[0, max]` linearly onto `[0, 65535]`. Returns the scale factor, gray
/// level per unit value (0 for an all-zero input).
pub fn write_magnitude_pgm(path: impl AsRef<Path>, values: &[f64], d: usize) -> Result<f64> {
    let max = values.iter().copied().fold(0.0, f64::max);
    let scale = if max > 0.0 { u16::MAX as f64 / max } else { 0.0 };
    write_gray_pgm(path, values, d, scale)?;
    Ok(scale)
}

/// Writes `values * scale`, rounded and clipped to `[0, 65535]`, as a 16-bit
/// binary PGM.
pub fn write_gray_pgm(path: impl AsRef<Path>, values: &[f64], d: usize, scale: f64) -> Result<()> {
    if values.len() != d * d {
        return Err(Error::Dimension {
            expected: d * d,
            actual: values.len(),
        });
    }
    let bytes: Vec<u8> = values
        .iter()
        .flat_map(|v| ((v.max(0.0) * scale).round().min(u16::MAX as f64) as u16).to_be_bytes())
        .collect();
    let mut w = BufWriter::new(File::create(path)?);
    write!(w, "P5\n{d} {d}\n65535\n")?;
    w.write_all(&bytes)?;
    w.flush()?;
    Ok(())
}

#[derive(Debug, Serialize, Deserialize)]
struct FilterRecord {
    filter: String,
    row: usize,
    col: usize,
    phase: f64,
}

/// `filter,row,col,phase` for every entry of `hr`, `hm` and `ha`.
pub fn write_filter_bank_csv(path: impl AsRef<Path>, bank: &FilterBank) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    let d = bank.d;
    for (l, &phase) in bank.hr.iter().enumerate() {
        w.serialize(FilterRecord {
            filter: "hr".into(),
            row: l,
            col: 0,
            phase,
        })?;
    }
    for (name, table) in [("hm", &bank.hm), ("ha", &bank.ha)] {
        for (k, &phase) in table.iter().enumerate() {
            w.serialize(FilterRecord {
                filter: name.into(),
                row: k / d,
                col: k % d,
                phase,
            })?;
        }
    }
    w.flush()?;
    Ok(())
}
