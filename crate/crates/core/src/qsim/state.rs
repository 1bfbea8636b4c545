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

use num_complex::Complex64;

use super::{qft_gates, Gate, Register, RegisterLayout};
use crate::{ComplexImage, Error, Result};

const UNIT_TOL: f64 = 1e-10;

/// Where a diagonal acts: one register (broadcast over the other) or the
/// whole state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagonalTarget {
    Register(Register),
    All,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Statevector {
    layout: RegisterLayout,
    amps: Vec<Complex64>,
}

/// Amplitude-encodes an image: pixel `(i, j)` divided by the image's
/// Frobenius norm becomes the amplitude of `|i>_r |j>_a`.
pub fn encode_amplitudes(img: &ComplexImage) -> Result<Statevector> {
    let layout = RegisterLayout::for_side(img.d())?;
    let normalized = img.normalized()?;
    Ok(Statevector {
        layout,
        amps: normalized.into_vec(),
    })
}

impl Statevector {
    /// `|0...0>`.
    pub fn zero(layout: RegisterLayout) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); layout.dim()];
        amps[0] = Complex64::new(1.0, 0.0);
        Statevector { layout, amps }
    }

    /// Wraps raw amplitudes without renormalizing.
    pub fn from_amplitudes(layout: RegisterLayout, amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() != layout.dim() {
            return Err(Error::Dimension {
                expected: layout.dim(),
                actual: amps.len(),
            });
        }
        Ok(Statevector { layout, amps })
    }

    pub fn layout(&self) -> RegisterLayout {
        self.layout
    }

    pub fn n(&self) -> usize {
        self.layout.n()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|z| z.norm_sqr()).collect()
    }

    /// Reads the amplitudes back as a `d x d` image.
    pub fn to_image(&self) -> ComplexImage {
        ComplexImage::from_vec(self.layout.d(), self.amps.clone()).expect("layout matches a square image")
    }

    #[inline]
    fn mask(&self, q: usize) -> usize {
        1 << (self.n() - 1 - q)
    }

    fn check_qubit(&self, q: usize) -> Result<()> {
        if q >= self.n() {
            return Err(Error::QubitIndex { index: q, n: self.n() });
        }
        Ok(())
    }

    pub fn apply_gate(&mut self, gate: &Gate) -> Result<()> {
        let (a, b) = gate.qubits();
        self.check_qubit(a)?;
        if let Some(b) = b {
            self.check_qubit(b)?;
            if a == b {
                return Err(Error::RepeatedQubit(a));
            }
        }
        match *gate {
            Gate::H(q) => {
                let s = std::f64::consts::FRAC_1_SQRT_2;
                self.single(q, |x, y| ((x + y) * s, (x - y) * s));
            }
            Gate::X(q) => self.single(q, |x, y| (y, x)),
            Gate::Ry(q, t) => {
                let (c, s) = ((t / 2.0).cos(), (t / 2.0).sin());
                self.single(q, |x, y| (x * c - y * s, x * s + y * c));
            }
            Gate::Rz(q, t) => {
                let (lo, hi) = (Complex64::from_polar(1.0, -t / 2.0), Complex64::from_polar(1.0, t / 2.0));
                let m = self.mask(q);
                for (k, z) in self.amps.iter_mut().enumerate() {
                    *z *= if k & m == 0 { lo } else { hi };
                }
            }
            Gate::P(q, t) => {
                let ph = Complex64::from_polar(1.0, t);
                let m = self.mask(q);
                for (k, z) in self.amps.iter_mut().enumerate() {
                    if k & m != 0 {
                        *z *= ph;
                    }
                }
            }
            Gate::Cp { control, target, theta } => {
                let ph = Complex64::from_polar(1.0, theta);
                let m = self.mask(control) | self.mask(target);
                for (k, z) in self.amps.iter_mut().enumerate() {
                    if k & m == m {
                        *z *= ph;
                    }
                }
            }
            Gate::Cx { control, target } => {
                let (cm, tm) = (self.mask(control), self.mask(target));
                for k in 0..self.amps.len() {
                    if k & cm != 0 && k & tm == 0 {
                        self.amps.swap(k, k | tm);
                    }
                }
            }
            Gate::Swap(a, b) => {
                let (am, bm) = (self.mask(a), self.mask(b));
                for k in 0..self.amps.len() {
                    if k & am != 0 && k & bm == 0 {
                        self.amps.swap(k, k ^ am ^ bm);
                    }
                }
            }
        }
        Ok(())
    }

    /// Applies a 2x2 map to every amplitude pair differing in qubit `q`.
    fn single(&mut self, q: usize, f: impl Fn(Complex64, Complex64) -> (Complex64, Complex64)) {
        let m = self.mask(q);
        let len = self.amps.len();
        for base in (0..len).step_by(2 * m) {
            for k in base..base + m {
                let (x, y) = f(self.amps[k], self.amps[k | m]);
                self.amps[k] = x;
                self.amps[k | m] = y;
            }
        }
    }

    pub fn apply_gates<'a>(&mut self, gates: impl IntoIterator<Item = &'a Gate>) -> Result<()> {
        for g in gates {
            self.apply_gate(g)?;
        }
        Ok(())
    }

    /// Unitary DFT (kernel `exp(+2 pi i l k / d) / sqrt(d)`) on one register,
    /// executed as its gate circuit.
    pub fn qft_register(&mut self, reg: Register, inverse: bool) -> Result<()> {
        let qubits: Vec<usize> = self.layout.qubits(reg).collect();
        self.apply_gates(&qft_gates(&qubits, inverse))
    }

    fn diagonal_len(&self, target: DiagonalTarget) -> usize {
        match target {
            DiagonalTarget::All => self.amps.len(),
            DiagonalTarget::Register(_) => self.layout.d(),
        }
    }

    #[inline]
    fn diagonal_index(&self, target: DiagonalTarget, k: usize) -> usize {
        match target {
            DiagonalTarget::All => k,
            DiagonalTarget::Register(reg) => self.layout.value(reg, k),
        }
    }

    /// Multiplies each amplitude by the phase assigned to its basis index.
    /// Entries must have unit modulus.
    pub fn apply_diagonal(&mut self, phases: &[Complex64], target: DiagonalTarget) -> Result<()> {
        let len = self.diagonal_len(target);
        if phases.len() != len {
            return Err(Error::Dimension {
                expected: len,
                actual: phases.len(),
            });
        }
        if let Some((index, z)) = phases.iter().enumerate().find(|(_, z)| (z.norm() - 1.0).abs() > UNIT_TOL) {
            return Err(Error::NotUnitary {
                index,
                modulus: z.norm(),
            });
        }
        for k in 0..self.amps.len() {
            let p = phases[self.diagonal_index(target, k)];
            self.amps[k] *= p;
        }
        Ok(())
    }

    /// Same as [`apply_diagonal`](Self::apply_diagonal) with phases given as
    /// angles in radians.
    pub fn apply_phase_angles(&mut self, angles: &[f64], target: DiagonalTarget) -> Result<()> {
        let len = self.diagonal_len(target);
        if angles.len() != len {
            return Err(Error::Dimension {
                expected: len,
                actual: angles.len(),
            });
        }
        for k in 0..self.amps.len() {
            let t = angles[self.diagonal_index(target, k)];
            self.amps[k] *= Complex64::from_polar(1.0, t);
        }
        Ok(())
    }

    /// Applies the diagonal `angles` on the register opposite to `control`,
    /// only on basis states where `control` holds `value`.
    pub fn apply_controlled_phase_angles(&mut self, control: Register, value: usize, angles: &[f64]) -> Result<()> {
        let d = self.layout.d();
        if value >= d {
            return Err(Error::validation("control value", format!("{value} >= {d}")));
        }
        if angles.len() != d {
            return Err(Error::Dimension {
                expected: d,
                actual: angles.len(),
            });
        }
        let target = control.other();
        for k in 0..self.amps.len() {
            if self.layout.value(control, k) == value {
                self.amps[k] *= Complex64::from_polar(1.0, angles[self.layout.value(target, k)]);
            }
        }
        Ok(())
    }
}
