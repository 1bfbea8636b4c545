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

//! Compilation of diagonal phase unitaries into primitive gates.
//!
//! A diagonal `diag(e^{i theta(x)})` on `m` qubits is expanded in Walsh
//! functions, `theta(x) = sum_j a_j (-1)^{popcount(j & x)}`. Each non-zero
//! term `j >= 1` becomes one `RZ(-2 a_j)` on the qubit of the lowest set bit
//! of `j`, with the remaining bits of `j` folded into that qubit by CNOTs.
//! Terms sharing a target are visited in Gray-code order, so consecutive
//! parity sets differ in one control and only one CNOT separates two
//! rotations. `a_0` is a global phase and is kept as metadata.
//!
//! Index `x` of a phase vector is read most-significant-first over the target
//! qubit list: `targets[0]` carries the top bit.

mod compile;
mod gatelist;
mod mcmt;
mod walsh;

pub use compile::{compile_diagonal, compile_diagonal_with, multiplexed_rotation, CompileOptions, TermOrdering};
pub use gatelist::{GateList, StageLabel, StageSpan};
pub use mcmt::{build_mcmt, fuse_controlled_sequence, xor_merge_xlayers};
pub use walsh::{fwht, walsh_coefficients, PhaseVector, WalshCoefficients};
