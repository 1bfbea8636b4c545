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

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::{is_pow2, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Register {
    /// Rows, fast time.
    Range,
    /// Columns, slow time.
    Azimuth,
}

impl Register {
    pub fn other(self) -> Register {
        match self {
            Register::Range => Register::Azimuth,
            Register::Azimuth => Register::Range,
        }
    }
}

/// Two equal registers, range first, both most-significant-qubit first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegisterLayout {
    pub n_r: usize,
    pub n_a: usize,
}

impl RegisterLayout {
    pub fn for_side(d: usize) -> Result<Self> {
        if !is_pow2(d) {
            return Err(Error::validation("d", format!("{d} is not a power of two >= 2")));
        }
        let half = d.trailing_zeros() as usize;
        Ok(RegisterLayout { n_r: half, n_a: half })
    }

    pub fn for_qubits(n: usize) -> Result<Self> {
        if n < 2 || n % 2 != 0 {
            return Err(Error::validation("n", format!("{n} qubits cannot be split into two equal registers")));
        }
        Ok(RegisterLayout { n_r: n / 2, n_a: n / 2 })
    }

    pub fn n(&self) -> usize {
        self.n_r + self.n_a
    }

    /// Image side length.
    pub fn d(&self) -> usize {
        1 << self.n_r
    }

    pub fn dim(&self) -> usize {
        1 << self.n()
    }

    pub fn qubits(&self, reg: Register) -> Range<usize> {
        match reg {
            Register::Range => 0..self.n_r,
            Register::Azimuth => self.n_r..self.n(),
        }
    }

    pub fn index(&self, row: usize, col: usize) -> usize {
        (row << self.n_a) | col
    }

    /// Value held by `reg` in basis state `index`.
    pub fn value(&self, reg: Register, index: usize) -> usize {
        match reg {
            Register::Range => index >> self.n_a,
            Register::Azimuth => index & ((1 << self.n_a) - 1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_major_flattening() {
        let l = RegisterLayout::for_side(8).unwrap();
        assert_eq!(l.n(), 6);
        assert_eq!(l.index(3, 5), 29);
        assert_eq!(l.value(Register::Range, 29), 3);
        assert_eq!(l.value(Register::Azimuth, 29), 5);
        assert_eq!(l.qubits(Register::Azimuth), 3..6);
        assert!(RegisterLayout::for_side(12).is_err());
        assert!(RegisterLayout::for_qubits(5).is_err());
    }
}
