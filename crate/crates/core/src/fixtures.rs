//! Small named instances shared by tests, benches and the CLI.

use crate::base::ImplicationalBase;
use crate::hypergraph::Hypergraph;
use crate::instances::gen_chain;
use crate::set::GroundSet;

/// Ground `1..5` with `4 -> 1, 25 -> 3, 12 -> 3, 15 -> 23`.
pub fn fixture_a() -> ImplicationalBase {
    let g = GroundSet::new(["1", "2", "3", "4", "5"]).expect("valid names");
    ImplicationalBase::from_names(
        g,
        &[("4", "1"), ("2 5", "3"), ("1 2", "3"), ("1 5", "2 3")],
    )
    .expect("valid base")
}

/// The two-pair chain instance, `gen_chain(2)`.
pub fn fixture_b() -> ImplicationalBase {
    gen_chain(2)
}

/// Acyclic base `1 -> 4, 12 -> 3, 23 -> 4` on `1..4`.
pub fn acyclic_pair_first() -> ImplicationalBase {
    let g = GroundSet::new(["1", "2", "3", "4"]).expect("valid names");
    ImplicationalBase::from_names(g, &[("1", "4"), ("1 2", "3"), ("2 3", "4")]).expect("valid base")
}

/// Base `1 -> 4, 124 -> 3, 23 -> 4`, equivalent to [`acyclic_pair_first`] but cyclic.
pub fn acyclic_pair_second() -> ImplicationalBase {
    let g = GroundSet::new(["1", "2", "3", "4"]).expect("valid names");
    ImplicationalBase::from_names(g, &[("1", "4"), ("1 2 4", "3"), ("2 3", "4")])
        .expect("valid base")
}

/// Hypergraph on `1..5` with edges `123, 234, 45`.
pub fn three_edge_hypergraph() -> Hypergraph {
    let g = GroundSet::new(["1", "2", "3", "4", "5"]).expect("valid names");
    let edges = ["1 2 3", "2 3 4", "4 5"]
        .iter()
        .map(|e| g.parse_set(e).expect("known names"))
        .collect();
    Hypergraph::new(g.clone(), g.full_set(), edges).expect("edges inside vertices")
}
