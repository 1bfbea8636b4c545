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

//! Statevector simulator with a range register and an azimuth register.
//!
//! Qubit `q` of an `n`-qubit state drives bit `n - 1 - q` of the basis index,
//! so qubit 0 is the most significant. The range register holds qubits
//! `0..n/2` and the azimuth register `n/2..n`; pixel `(i, j)` of a `d x d`
//! image is basis state `i * d + j`.

mod gate;
mod layout;
mod measure;
mod qft;
mod state;

pub use gate::Gate;
pub use layout::{Register, RegisterLayout};
pub use measure::{sample, MeasurementHistogram};
pub use qft::qft_gates;
pub use state::{encode_amplitudes, DiagonalTarget, Statevector};
