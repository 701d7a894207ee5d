//! Exact symbolic engine for the double quantum group `C_q[D(G)] = C_q[G] ⋈ C_q[G]`
//! for `G = SL(2)` and `SL(3)`.

pub mod scalars;
pub mod freealg;
pub mod hopf;
pub mod double;
pub mod qgroups;
pub mod repr;
pub mod report;
