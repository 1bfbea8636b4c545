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

//! Classical range-Doppler focusing: frequency-domain reference filters and
//! the FFT pipeline that applies them.

mod filters;
mod focus;
mod transform;

pub use filters::{
    build_azimuth_filter, build_filter_bank, build_range_filter, build_rcmc_filter, FilterBank, FilterConvention,
    RcmcModel,
};
pub use focus::{focus_classical, focus_steps, range_compress, Step};
pub use transform::{Direction, UnitaryDft};
