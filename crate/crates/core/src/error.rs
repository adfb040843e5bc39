use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: expected {expected}, found {found}")]
    Parse {
        line: usize,
        column: usize,
        expected: String,
        found: String,
    },

    #[error("invalid atom name `{0}`")]
    InvalidAtom(String),

    #[error("enumeration cap exceeded: {atoms} atoms, cap is {cap}")]
    CapExceeded { cap: usize, atoms: usize },

    #[error("cap {requested} is above the supported maximum {max}")]
    CapTooLarge { requested: usize, max: usize },

    #[error("not a nondisjunctive rule: `{formula}`")]
    NotNondisjunctive { formula: String },

    #[error("atoms not occurring in the formula: {atoms}")]
    AtomsOutsideFormula { atoms: String },

    #[error("atoms outside the enumeration universe: {atoms}")]
    AtomsOutsideUniverse { atoms: String },

    #[error("loop formulas need a nonempty set of atoms")]
    EmptyLoopSet,

    #[error("not a partition of the atoms {universe}: {reason}")]
    NotAPartition { universe: String, reason: String },

    #[error("unknown property `{0}`")]
    UnknownProperty(String),

    #[error("{0}")]
    InvalidArgument(String),
}

/// `{a, b, c}` rendering used in error messages.
pub(crate) fn atom_set_text<'a>(atoms: impl IntoIterator<Item = &'a crate::Atom>) -> String {
    let names: Vec<&str> = atoms.into_iter().map(|a| a.name()).collect();
    format!("{{{}}}", names.join(", "))
}
