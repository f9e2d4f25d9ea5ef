//! Workloads shared by the criterion benches.

use stong_core::ast::SpaceAst;
use stong_core::{ConjugationModel, FlagSpec, GroupRank, ProjSpec};

/// Real flag manifold over all eight characters of `(Z2)^3`, blocks
/// `(2, 3, 3)`: 560 stationary flags.
pub fn large_flag() -> FlagSpec {
    let rank = GroupRank::new(3).unwrap();
    FlagSpec::new(rank, rank.characters().collect(), vec![2, 3, 3]).unwrap()
}

/// `RP^3` under the full diagonal group of rank 2.
pub fn full_proj() -> ProjSpec {
    let rank = GroupRank::new(2).unwrap();
    ProjSpec::new(rank, rank.characters().collect()).unwrap()
}

pub fn flag_base() -> ConjugationModel {
    stong_core::spaces::real_flag_space(&large_flag()).unwrap()
}

pub fn dold_ast() -> SpaceAst {
    SpaceAst::from_json(
        r#"{"kind":"dold","proj":{"s":2,"chars":[[],[1],[2],[1,2]]},
            "base":{"kind":"real_flag","q":3,"S":[[],[1],[2],[3],[1,2],[1,3],[2,3],[1,2,3]],"parts":[2,3,3]}}"#,
    )
    .unwrap()
}
