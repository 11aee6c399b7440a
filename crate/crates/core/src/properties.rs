//! Executable checks of structural facts about corona products and
//! distances, used by the cross-validation suite and the tests.

use serde::Serialize;

use crate::corona::CoronaStructure;
use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::metric::{all_pairs, DistanceMatrix};
use crate::resolver::{is_resolving, LandmarkSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl PropertyCheck {
    fn from(name: &'static str, failure: Option<String>) -> Self {
        PropertyCheck {
            name,
            holds: failure.is_none(),
            detail: failure,
        }
    }
}

pub const COPY_DISTANCES: &str = "copy-vertices-equidistant";
pub const COPY_RADIUS: &str = "copy-within-distance-2";
pub const COPIES_HIT: &str = "witness-meets-every-copy";
pub const SPINE_STRIP: &str = "witness-without-spine-resolves";
pub const COPY_RESOLVING: &str = "witness-restricted-to-copy-resolves-copy";
pub const NEIGHBOR_DISTANCE: &str = "neighbor-distance-differs";

/// Two vertices of one copy are equidistant from every vertex outside it.
pub fn copy_distance_violation(dm: &DistanceMatrix, cs: &CoronaStructure) -> Option<String> {
    let n = dm.order();
    for (i, copy) in cs.copies.iter().enumerate() {
        let Some((&first, rest)) = copy.split_first() else {
            continue;
        };
        for x in (0..n).filter(|&x| cs.copy_of(x) != Some(i)) {
            let d = dm.get(first, x);
            if let Some(&u) = rest.iter().find(|&&u| dm.get(u, x) != d) {
                return Some(format!("d({first},{x}) != d({u},{x}) in copy {i}"));
            }
        }
    }
    None
}

/// Vertices of the same copy are at distance at most 2.
pub fn copy_radius_violation(dm: &DistanceMatrix, cs: &CoronaStructure) -> Option<String> {
    for copy in &cs.copies {
        for &u in copy {
            for &v in copy {
                if dm.get(u, v).finite().is_none_or(|d| d > 2) {
                    return Some(format!("d({u},{v}) > 2"));
                }
            }
        }
    }
    None
}

pub fn copies_hit_violation(cs: &CoronaStructure, witness: &LandmarkSet) -> Option<String> {
    cs.copies
        .iter()
        .position(|copy| !copy.iter().any(|&v| witness.contains(v)))
        .map(|i| format!("copy {i} contains no landmark"))
}

/// Dropping the spine vertices from a resolving set keeps it resolving.
pub fn spine_strip_violation(
    dm: &DistanceMatrix,
    cs: &CoronaStructure,
    witness: &LandmarkSet,
) -> Result<Option<String>> {
    let stripped = witness.filtered(|v| !cs.is_spine(v));
    Ok((!is_resolving(dm, &stripped)?).then(|| format!("{stripped} does not resolve")))
}

/// The landmarks inside each copy resolve that copy as a graph on its own.
pub fn copy_resolving_violation(
    product: &Graph,
    cs: &CoronaStructure,
    witness: &LandmarkSet,
) -> Result<Option<String>> {
    for (i, copy) in cs.copies.iter().enumerate() {
        let sub = product.induced_subgraph(copy);
        let local: Vec<Vertex> = copy
            .iter()
            .enumerate()
            .filter(|(_, &v)| witness.contains(v))
            .map(|(j, _)| j)
            .collect();
        let local = LandmarkSet::new(local, sub.order())?;
        if !is_resolving(&all_pairs(&sub), &local)? {
            return Ok(Some(format!("landmarks {local} do not resolve copy {i}")));
        }
    }
    Ok(None)
}

/// Runs the corona checks against a minimum resolving set `witness` of the
/// top-level product `product = G ⊙ H`, where `G` must be connected.
///
/// The witness checks need `G` and `H` of order at least 2; the
/// copy-resolving check also needs `H` connected. Checks whose hypotheses
/// fail are omitted.
pub fn corona_checks(
    product: &Graph,
    cs: &CoronaStructure,
    h: &Graph,
    witness: &LandmarkSet,
) -> Result<Vec<PropertyCheck>> {
    let dm = all_pairs(product);
    let mut out = vec![
        PropertyCheck::from(COPY_DISTANCES, copy_distance_violation(&dm, cs)),
        PropertyCheck::from(COPY_RADIUS, copy_radius_violation(&dm, cs)),
    ];
    if cs.spine.len() < 2 || h.order() < 2 {
        return Ok(out);
    }
    out.push(PropertyCheck::from(COPIES_HIT, copies_hit_violation(cs, witness)));
    out.push(PropertyCheck::from(
        SPINE_STRIP,
        spine_strip_violation(&dm, cs, witness)?,
    ));
    if h.is_connected() {
        out.push(PropertyCheck::from(
            COPY_RESOLVING,
            copy_resolving_violation(product, cs, witness)?,
        ));
    }
    Ok(out)
}

/// For `v` of degree at least 2 and a neighbor `u`, some `x` outside
/// `{u, v}` has `d(v, x) != d(u, x) + 1`. Returns the first failing `(v, u)`.
pub fn neighbor_distance_violation(g: &Graph) -> Option<(Vertex, Vertex)> {
    let dm = all_pairs(g);
    for v in g.vertices().filter(|&v| g.degree(v) >= 2) {
        for &u in g.neighbors(v) {
            let separated = g.vertices().filter(|&x| x != u && x != v).any(|x| {
                match (dm.get(v, x).finite(), dm.get(u, x).finite()) {
                    (Some(a), Some(b)) => a != b + 1,
                    _ => false,
                }
            });
            if !separated {
                return Some((v, u));
            }
        }
    }
    None
}

pub fn neighbor_distance_check(g: &Graph) -> PropertyCheck {
    let failure = neighbor_distance_violation(g).map(|(v, u)| format!("every x has d({v},x) = d({u},x) + 1"));
    PropertyCheck::from(NEIGHBOR_DISTANCE, failure)
}
