//! Complexity regime of VDK_r / EDK_r as a function of (r, Δ).
//!
//! All thresholds are compared in integers: `Δ < 3r/2 − 1` becomes
//! `2(Δ + 1) < 3r`, `Δ < 5r/3 − 1` becomes `3(Δ + 1) < 5r`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::clique::Mode;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegimeTag {
    /// Every maximal packing is maximum.
    LinearTime,
    /// The K_r vertex-intersection graph is claw-free.
    PolyVertexClawFree,
    /// The K_r edge-intersection graph is claw-free (r ≤ 5).
    PolyEdgeClawFree,
    ApxHard,
}

impl RegimeTag {
    pub fn is_polynomial(self) -> bool {
        !matches!(self, RegimeTag::ApxHard)
    }
}

impl fmt::Display for RegimeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Regime {
    pub tag: RegimeTag,
    pub threshold_note: String,
}

pub fn classify_regime(r: usize, delta: usize, mode: Mode) -> Result<Regime> {
    if r < 3 {
        return Err(Error::InvalidArgument(format!(
            "regimes are defined for r >= 3, got {r}"
        )));
    }
    let linear = 2 * (delta + 1) < 3 * r;
    let below_five_thirds = 3 * (delta + 1) < 5 * r;
    let hard_from = (5 * r).div_ceil(3) - 1;
    let (tag, note) = if linear {
        (
            RegimeTag::LinearTime,
            format!("Δ={delta} < 3r/2 - 1 = {}/2", 3 * r - 2),
        )
    } else if mode == Mode::Edge && r <= 5 {
        if delta <= 2 * r - 2 {
            (
                RegimeTag::PolyEdgeClawFree,
                format!("Δ={delta} <= 2r - 2 = {}", 2 * r - 2),
            )
        } else {
            (
                RegimeTag::ApxHard,
                format!("Δ={delta} > 2r - 2 = {}", 2 * r - 2),
            )
        }
    } else if below_five_thirds {
        (
            RegimeTag::PolyVertexClawFree,
            format!("Δ={delta} < 5r/3 - 1 = {}/3", 5 * r - 3),
        )
    } else {
        (
            RegimeTag::ApxHard,
            format!("Δ={delta} >= ⌈5r/3⌉ - 1 = {hard_from}"),
        )
    };
    Ok(Regime {
        tag,
        threshold_note: note,
    })
}
