use super::{heawood_line_distance3, is_edge_regular, is_strongly_regular, max_clique, CliqueResult};
use crate::bounds::{cab, delsarte_value, hoffman_clique_bound};
use crate::error::Result;
use crate::exactnum::QuadExt;
use crate::srg::EdgeRegularParams;

/// Bounds for the distance-3 graph of the Fano line graph, using its known
/// least eigenvalue `-sqrt(8)` and the complement's least eigenvalue `-1 - sqrt(8)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Delta3Report {
    pub params: EdgeRegularParams,
    pub strongly_regular: bool,
    pub cab: i64,
    pub delsarte: i64,
    pub hoffman: i64,
    pub clique: CliqueResult,
}

pub fn delta3_report() -> Result<Delta3Report> {
    let g = heawood_line_distance3();
    let params = is_edge_regular(&g).expect("fixture is edge-regular");
    let least = -QuadExt::sqrt(8);
    let complement_least = &least - &QuadExt::integer(1);
    let delsarte = delsarte_value(params.k, &least)?.floor();
    Ok(Delta3Report {
        params,
        strongly_regular: is_strongly_regular(&g).is_some(),
        cab: cab(&params).0,
        delsarte: delsarte.try_into().expect("small"),
        hoffman: hoffman_clique_bound(params.v, params.v - params.k - 1, &complement_least)?,
        clique: max_clique(&g)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_values() {
        let r = delta3_report().unwrap();
        assert_eq!(r.params, EdgeRegularParams::new(21, 8, 3).unwrap());
        assert!(!r.strongly_regular);
        assert_eq!((r.cab, r.delsarte, r.hoffman, r.clique.size), (4, 3, 5, 3));
    }
}
