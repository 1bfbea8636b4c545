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

use std::f64::consts::PI;

use super::Gate;

/// QFT circuit on `qubits` (most significant first): a Hadamard and a
/// ladder of controlled phases per qubit, then a swap layer reversing the
/// qubit order. With `inverse` the gates run in reverse with negated angles.
pub fn qft_gates(qubits: &[usize], inverse: bool) -> Vec<Gate> {
    let m = qubits.len();
    let mut gates = Vec::with_capacity(m * (m + 1) / 2 + m / 2);
    for j in 0..m {
        gates.push(Gate::H(qubits[j]));
        for k in j + 1..m {
            gates.push(Gate::Cp {
                control: qubits[k],
                target: qubits[j],
                theta: 2.0 * PI / (1u64 << (k - j + 1)) as f64,
            });
        }
    }
    for j in 0..m / 2 {
        gates.push(Gate::Swap(qubits[j], qubits[m - 1 - j]));
    }
    if inverse {
        gates.reverse();
        gates.iter_mut().for_each(|g| *g = g.inverse());
    }
    gates
}
