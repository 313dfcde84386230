//! Inputs shared by the benchmarks.

use supereuler::blowup::{blow_up, BlowUpSpec, Replacement};
use supereuler::named::{p14, petersen};
use supereuler::MultiGraph;

/// Petersen with every vertex replaced by `K_s`.
pub fn petersen_blow_up(s: usize) -> MultiGraph {
    blow_up(&BlowUpSpec::uniform(petersen(), Replacement::complete(s))).expect("valid blow-up")
}

/// P14 with every vertex replaced by `K_s`.
pub fn p14_blow_up(s: usize) -> MultiGraph {
    blow_up(&BlowUpSpec::uniform(p14(), Replacement::complete(s))).expect("valid blow-up")
}
