// SPDX-License-Identifier: Apache-2.0

//! Benchmarks live under benches/.
