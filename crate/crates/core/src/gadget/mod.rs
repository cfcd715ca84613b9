//! Executable hardness reductions with both solution maps.

mod bundle;
mod edk;
mod lreduction;
mod vdkr;

pub use bundle::{Bundle, BUNDLE_SCHEMA};
pub use edk::{ClauseClique, EdkKind, EdkReduction, Role};
pub use lreduction::{
    verify_l_reduction, LCheckConfig, LReductionReport, ReductionKind, Sample, Violation,
};
pub use vdkr::VdkrReduction;

use crate::error::Result;
use crate::graph::{Graph, VertexId};
use crate::packing::Packing;
use crate::sat::{Assignment, Formula};

// Free-function entry points over the reduction types.

pub fn reduce_mis_to_vdkr(g: &Graph, r: usize) -> Result<VdkrReduction> {
    VdkrReduction::new(g, r)
}

pub fn vdkr_map_is_to_packing(red: &VdkrReduction, s: &[VertexId]) -> Result<Packing> {
    red.map_is_to_packing(s)
}

pub fn vdkr_map_packing_to_is(red: &VdkrReduction, t: &Packing) -> Result<Vec<VertexId>> {
    red.map_packing_to_is(t)
}

pub fn reduce_max2sat3_to_edk4(phi: &Formula) -> Result<EdkReduction> {
    EdkReduction::new(EdkKind::K4, phi)
}

pub fn reduce_max2sat3_to_edk5(phi: &Formula) -> Result<EdkReduction> {
    EdkReduction::new(EdkKind::K5, phi)
}

pub fn edk_assignment_to_packing(red: &EdkReduction, f: &Assignment) -> Result<Packing> {
    red.assignment_to_packing(f)
}

pub fn canonicalize_packing(red: &EdkReduction, t: &Packing) -> Result<Packing> {
    red.canonicalize(t)
}

pub fn edk_packing_to_assignment(red: &EdkReduction, t: &Packing) -> Result<Assignment> {
    red.packing_to_assignment(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat::count_satisfied;

    #[test]
    fn free_functions_delegate() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let red = reduce_mis_to_vdkr(&g, 4).unwrap();
        let p = vdkr_map_is_to_packing(&red, &[0, 2]).unwrap();
        assert_eq!(vdkr_map_packing_to_is(&red, &p).unwrap(), vec![0, 2]);

        let phi = Formula::from_dimacs(2, &[&[1, 2], &[-1, -2]]).unwrap();
        for red in [
            reduce_max2sat3_to_edk4(&phi).unwrap(),
            reduce_max2sat3_to_edk5(&phi).unwrap(),
        ] {
            let f = Assignment(vec![true, false]);
            let t = edk_assignment_to_packing(&red, &f).unwrap();
            let c = canonicalize_packing(&red, &t).unwrap();
            assert_eq!(c.len(), t.len());
            assert_eq!(
                count_satisfied(&phi, &edk_packing_to_assignment(&red, &c).unwrap()),
                2
            );
        }
    }
}
