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

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::Error;

/// Primitive gates. `Rz(t)` is `diag(e^{-it/2}, e^{it/2})`, `P(t)` is
/// `diag(1, e^{it})` and `Cp` applies `e^{it}` when both qubits are set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Gate {
    H(usize),
    X(usize),
    Cx { control: usize, target: usize },
    Rz(usize, f64),
    Ry(usize, f64),
    P(usize, f64),
    Cp { control: usize, target: usize, theta: f64 },
    Swap(usize, usize),
}

impl Gate {
    pub fn qubits(&self) -> (usize, Option<usize>) {
        match *self {
            Gate::H(q) | Gate::X(q) | Gate::Rz(q, _) | Gate::Ry(q, _) | Gate::P(q, _) => (q, None),
            Gate::Cx { control, target } | Gate::Cp { control, target, .. } => (control, Some(target)),
            Gate::Swap(a, b) => (a, Some(b)),
        }
    }

    pub fn is_two_qubit(&self) -> bool {
        self.qubits().1.is_some()
    }

    pub fn max_qubit(&self) -> usize {
        let (a, b) = self.qubits();
        b.map_or(a, |b| a.max(b))
    }

    pub fn inverse(&self) -> Gate {
        match *self {
            Gate::Rz(q, t) => Gate::Rz(q, -t),
            Gate::Ry(q, t) => Gate::Ry(q, -t),
            Gate::P(q, t) => Gate::P(q, -t),
            Gate::Cp { control, target, theta } => Gate::Cp {
                control,
                target,
                theta: -theta,
            },
            g => g,
        }
    }

    /// Upper-case mnemonic used in the text format.
    pub fn name(&self) -> &'static str {
        match self {
            Gate::H(_) => "H",
            Gate::X(_) => "X",
            Gate::Cx { .. } => "CX",
            Gate::Rz(..) => "RZ",
            Gate::Ry(..) => "RY",
            Gate::P(..) => "P",
            Gate::Cp { .. } => "CP",
            Gate::Swap(..) => "SWAP",
        }
    }
}

impl fmt::Display for Gate {
    /// One line of the gate-list text format, e.g. `CX 2 5` or `RZ 4 1.5707963`.
    /// Angles are written with round-trip precision.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gate::H(q) | Gate::X(q) => write!(f, "{} {q}", self.name()),
            Gate::Cx { control, target } => write!(f, "CX {control} {target}"),
            Gate::Swap(a, b) => write!(f, "SWAP {a} {b}"),
            Gate::Rz(q, t) | Gate::Ry(q, t) | Gate::P(q, t) => write!(f, "{} {q} {t:?}", self.name()),
            Gate::Cp { control, target, theta } => write!(f, "CP {control} {target} {theta:?}"),
        }
    }
}

impl FromStr for Gate {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self, Self::Err> {
        let bad = || Error::Parse(format!("malformed gate line `{line}`"));
        let mut it = line.split_whitespace();
        let name = it.next().ok_or_else(bad)?;
        let args: Vec<&str> = it.collect();
        let q = |k: usize| -> Result<usize, Error> { args.get(k).ok_or_else(bad)?.parse().map_err(|_| bad()) };
        let a = |k: usize| -> Result<f64, Error> { args.get(k).ok_or_else(bad)?.parse().map_err(|_| bad()) };
        let arity = match name {
            "H" | "X" => 1,
            "CX" | "SWAP" | "RZ" | "RY" | "P" => 2,
            "CP" => 3,
            _ => return Err(bad()),
        };
        if args.len() != arity {
            return Err(bad());
        }
        Ok(match name {
            "H" => Gate::H(q(0)?),
            "X" => Gate::X(q(0)?),
            "CX" => Gate::Cx {
                control: q(0)?,
                target: q(1)?,
            },
            "SWAP" => Gate::Swap(q(0)?, q(1)?),
            "RZ" => Gate::Rz(q(0)?, a(1)?),
            "RY" => Gate::Ry(q(0)?, a(1)?),
            "P" => Gate::P(q(0)?, a(1)?),
            _ => Gate::Cp {
                control: q(0)?,
                target: q(1)?,
                theta: a(2)?,
            },
        })
    }
}
