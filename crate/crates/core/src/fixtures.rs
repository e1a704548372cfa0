//! Named test objects shared by unit tests, integration tests, benches and
//! the command-line tool.

/// Planar theta graph with one positive matched edge.
pub const THETA: &str = "\
vertex u solid e1.a e2.a e3.a
vertex v solid e1.b e3.b e2.b
medge e1 + a
edge e2
edge e3
";
/// [`THETA`] drawn with `v` hollow and its rotation reversed.
pub const THETA_HOLLOW: &str = "\
vertex u solid e1.a e2.a e3.a
vertex v hollow e1.b e2.b e3.b
medge e1 + a
edge e2
edge e3
";
/// Theta graph with both rotations in the same order: one face, genus one.
pub const THETA_TORUS: &str = "\
vertex u solid e1.a e2.a e3.a
vertex v solid e1.b e2.b e3.b
medge e1 + a
edge e2
edge e3
";
/// One free loop.
pub const UNGRAPH1: &str = "\
loop l1
";
/// Planar cube; the matching is the set of edges changing bit 2.
pub const CUBEQ3: &str = "\
vertex v0 solid e3.a e2.a e1.a
vertex v1 solid e5.a e1.b e4.a
vertex v2 solid e7.a e6.a e2.b
vertex v3 solid e8.a e4.b e6.b
vertex v4 solid e3.b e9.a e10.a
vertex v5 solid e5.b e11.a e9.b
vertex v6 solid e7.b e10.b e12.a
vertex v7 solid e8.b e12.b e11.b
edge e1
edge e2
medge e3 + a
edge e4
medge e5 + a
edge e6
medge e7 + a
medge e8 + a
edge e9
edge e10
edge e11
edge e12
";
/// Planar K4 with matching {v0v1, v2v3}.
pub const K4M: &str = "\
vertex v0 solid e1.a e3.a e2.a
vertex v1 solid e1.b e4.a e5.a
vertex v2 solid e6.a e4.b e2.b
vertex v3 solid e6.b e3.b e5.b
medge e1 + a
edge e2
edge e3
edge e4
edge e5
medge e6 + a
";
/// Petersen graph drawn as pentagon plus pentagram, spokes matched.
pub const PETERSEN: &str = "\
vertex v0 solid e1.a e10.a e6.a
vertex v1 solid e2.a e6.b e7.a
vertex v2 solid e3.a e7.b e8.a
vertex v3 solid e4.a e8.b e9.a
vertex v4 solid e5.a e9.b e10.b
vertex v5 solid e1.b e11.a e14.a
vertex v6 solid e2.b e12.a e15.a
vertex v7 solid e3.b e13.a e11.b
vertex v8 solid e4.b e14.b e12.b
vertex v9 solid e5.b e15.b e13.b
medge e1 + a
medge e2 + a
medge e3 + a
medge e4 + a
medge e5 + a
edge e6
edge e7
edge e8
edge e9
edge e10
edge e11
edge e12
edge e13
edge e14
edge e15
";
/// K inverse of [`TREFOIL`]; the underlying graph is K3,3.
pub const K33TREF: &str = "\
vertex v1 solid m1.a a6.b a1.a
vertex v2 solid m2.b a1.b a2.a
vertex v3 solid m3.a a2.b a3.a
vertex v4 solid m1.b a3.b a4.a
vertex v5 solid m2.a a4.b a5.a
vertex v6 solid m3.b a5.b a6.a
edge a1
edge a2
edge a3
edge a4
edge a5
edge a6
medge m1 + a
medge m2 + a
medge m3 + a
";
/// Franklin graph: a 12-cycle with chords `i - (i+5)` for even `i`, the chords
/// forming the matching. K inverse of [`FRANKLIN_CODE`].
pub const FRANKLIN: &str = "\
vertex v1 solid m1.b a12.b a1.a
vertex v2 solid m2.a a1.b a2.a
vertex v3 solid m3.a a2.b a3.a
vertex v4 solid m4.a a3.b a4.a
vertex v5 solid m5.a a4.b a5.a
vertex v6 solid m1.a a5.b a6.a
vertex v7 solid m6.a a6.b a7.a
vertex v8 solid m3.b a8.a a7.b
vertex v9 solid m2.b a8.b a9.a
vertex v10 solid m5.b a10.a a9.b
vertex v11 solid m4.b a10.b a11.a
vertex v12 solid m6.b a12.a a11.b
edge a1
edge a2
edge a3
edge a4
edge a5
edge a6
edge a7
edge a8
edge a9
edge a10
edge a11
edge a12
medge m1 + a
medge m2 + a
medge m3 + a
medge m4 + a
medge m5 + a
medge m6 + a
";
/// K inverse of [`VTREFOIL`]: a 4-vertex even graphene with one complement cycle.
pub const VTREF_GRAPH: &str = "\
vertex v1 solid m1.a a4.b a1.a
vertex v2 solid m2.a a1.b a2.a
vertex v3 solid m1.b a2.b a3.a
vertex v4 solid m2.b a3.b a4.a
edge a1
edge a2
edge a3
edge a4
medge m1 + a
medge m2 + a
";

/// Trefoil: one component, three positive crossings.
pub const TREFOIL: &str = "component: O1+ U2+ O3+ U1+ O2+ U3+\n";
/// Two-component, two-crossing link with all passes of one component over.
pub const HOPF2: &str = "component: O1+ O2+\ncomponent: U1+ U2+\n";
/// Crossing-free unknot.
pub const UNKNOT0: &str = "component:\n";
/// Virtual trefoil.
pub const VTREFOIL: &str = "component: O1+ O2+ U1+ U2+\n";
/// Two diamonds joined by two matched edges: a planar graph with a 2-edge cut
/// separating `v0..v3` from `v4..v7`.
pub const TWOCUT: &str = "\
vertex v0 solid e1.a e3.a e4.a
vertex v1 solid e2.a e6.a e5.a
vertex v2 solid e7.a e3.b e5.b
vertex v3 solid e7.b e6.b e4.b
vertex v4 solid e1.b e9.a e8.a
vertex v5 solid e2.b e10.a e11.a
vertex v6 solid e12.a e10.b e8.b
vertex v7 solid e12.b e9.b e11.b
medge e1 + a
medge e2 + a
edge e3
edge e4
edge e5
edge e6
medge e7 + a
edge e8
edge e9
edge e10
edge e11
medge e12 + a
";
/// Single-component code reducing to [`UNKNOT0`] by three R2 moves; its K
/// preimage is the Franklin graph.
pub const FRANKLIN_CODE: &str = "component: U1+ O2+ O3- O4+ O5- O1+ O6- U3- U2+ U5- U4+ U6-\n";

/// Every matched-graph fixture with its name.
pub const ALL_MATCHED: &[(&str, &str)] = &[
    ("THETA", THETA),
    ("THETA_HOLLOW", THETA_HOLLOW),
    ("THETA_TORUS", THETA_TORUS),
    ("UNGRAPH1", UNGRAPH1),
    ("CUBEQ3", CUBEQ3),
    ("K4M", K4M),
    ("PETERSEN", PETERSEN),
    ("K33TREF", K33TREF),
    ("FRANKLIN", FRANKLIN),
    ("VTREF_GRAPH", VTREF_GRAPH),
    ("TWOCUT", TWOCUT),
];

/// Every Gauss-code fixture with its name.
pub const ALL_CODES: &[(&str, &str)] = &[
    ("TREFOIL", TREFOIL),
    ("HOPF2", HOPF2),
    ("UNKNOT0", UNKNOT0),
    ("VTREFOIL", VTREFOIL),
    ("FRANKLIN_CODE", FRANKLIN_CODE),
];
