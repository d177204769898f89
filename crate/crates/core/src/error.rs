use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("SyntaxError: {0}")]
    Syntax(String),
    #[error("ArcMultiplicityError: arc {arc}")]
    ArcMultiplicity { arc: u32, count: usize },
    #[error("OrientationError: arc {arc}")]
    Orientation { arc: u32 },
    #[error("NonPlanarError: Euler characteristic {euler} on a diagram piece")]
    NonPlanar { euler: i64 },
    #[error("NotStuck: crossing {0} is classical")]
    NotStuck(usize),
    #[error("NotClassical: crossing {0} is stuck")]
    NotClassical(usize),
    #[error("NoSuchCrossing: crossing {0}")]
    NoSuchCrossing(usize),
    #[error("ChoiceArityMismatch: expected {expected} choices, got {got}")]
    ChoiceArityMismatch { expected: usize, got: usize },
    #[error("EmptyDiagram: the diagram has no components")]
    EmptyDiagram,
    #[error("CapExceeded: {crossings} classical crossings exceed the state-sum cap of {cap}")]
    CapExceeded { crossings: usize, cap: usize },
    #[error("BudgetExceeded: more than {0} recursion nodes")]
    BudgetExceeded(usize),
    #[error("InapplicableMove: {0}")]
    InapplicableMove(String),
    #[error("InvariantMismatch: {0} differs between the underlying classical diagrams")]
    InvariantMismatch(String),
    #[error("NegativeExponentSubstitution: negative power meets a non-invertible value")]
    NegativeExponentSubstitution,
    #[error("UnknownEntry: {0}")]
    UnknownEntry(String),
}
