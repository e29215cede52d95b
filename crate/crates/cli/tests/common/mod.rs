/// One invocation per command, covering the optional flags.
pub const COMMANDS: &[&[&str]] = &[
    &["normalize", "A*B - q*B*A"],
    &["normalize", "C*B*A", "--rules", "printed"],
    &["bracket", "A^2", "B"],
    &["adjoint", "B^2*C + A"],
    &["decompose", "A^2 + 3*B + [A,B]"],
    &["is-lie", "[A,B] + A"],
    &["is-compact", "C*A^2"],
    &["calkin", "A*B + B^2"],
    &["apply", "B*C + A^2", "--n", "3"],
    &["apply", "B*C + A^2", "--n", "3", "--q", "1/2"],
    &["verify", "identities", "--kmax", "1", "--lmax", "2"],
    &["verify", "fredholm"],
    &["verify", "confluence", "--rules", "printed", "--maxlen", "3"],
    &["verify", "confluence", "--rules", "completed", "--maxlen", "4"],
    &["spectrum", "--op", "A"],
    &["spectrum", "--op", "B", "--q", "1/2"],
    &["spectrum", "--op", "C", "--k", "2", "--q", "1/3"],
    &["norm", "B^2 + C", "--q", "1/2", "--dim", "40"],
    &["radius", "--q", "1/2", "--kmax", "5", "--dim", "50"],
    &["lower-index", "--q", "0.25", "--kmax", "5", "--dim", "50"],
    &["coherent", "--c", "0.5,-0.5", "--q", "1/2", "--dim", "30"],
    &[
        "surrogate",
        "--side",
        "B",
        "--l",
        "2",
        "--n",
        "3",
        "--k",
        "1",
        "--coeff",
        "2/(1-q)",
    ],
];
