//! Graphene diagrams (decorated trivalent ribbon graphs with a directed
//! perfect matching), signed Gauss codes, the functor between them, and the
//! invariants computed across that bridge.

pub mod embed;
pub mod error;
pub mod fixtures;
pub mod functor;
pub mod gauss;
pub mod homology;
pub mod ids;
pub mod invariants;
pub mod matched;
pub mod poly;
pub mod rewrite;
pub mod simple;
pub mod surface;

pub use embed::{
    bicolored_multicycles, dkh_rank, multicycle_bijection, strong_embedding, two_colorings, FaceLabel, Multicycle,
    RibbonEmbedding, TwoColoring,
};
pub use error::{Error, Result, ValidationReport, Violation};
pub use functor::{forget_direction, k_inverse, k_map, k_map_labeled, k_map_oriented, CycleOrientation, KLabels, ZGraph};
pub use gauss::{parse_gauss_code, GaussCode, Pass, Strand};
pub use homology::{
    baldridge_homology, check_shift_iso, graded_euler_characteristic, khovanov_z2, BigradedDims,
};
pub use invariants::{
    binary_bracket, fox_colorings, jones, kauffman_bracket, natural_cycle_orientation, normalized_binary, penrose_number,
    sum_jones_at_one, tait_count_expansion, two_factor_bracket, wirtinger_presentation, GroupPresentation,
};
pub use matched::{
    parse_matched_graph, Decoration, Edge, EdgeSpec, EndRef, MatchData, MatchedGraph, MatchedGraphBuilder, Side, Sign,
    Vertex, VertexSpec,
};
pub use poly::{LaurentPoly, Var};
pub use rewrite::{
    apply, canonical_code, canonical_key, equivalent_within, flip_region, graphene_move, reidemeister_neighbors,
    round_trip_code, round_trip_graph, Budget, GrapheneMove, MoveTrace, RMove, SearchResult,
};
pub use simple::{enumerate_perfect_matchings, graph_isomorphic, tait_count_bruteforce, Graph};
pub use surface::{
    boundary_components, complement_cycles, genus, is_even_matching, normalize_solid, normalize_with_twists,
    ComplementCycle, FaceWalk,
};
