use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("image array is not a permutation")]
    NotPermutation,
    #[error("vertex cycles overlap or do not cover every half-edge")]
    NotPartition,
    #[error("edge pairing is not a fixed-point-free involution")]
    NotInvolution,
    #[error("half-edge label {0} out of range")]
    LabelOutOfRange(usize),
    #[error("edge order is not a permutation of the {0} edges")]
    BadEdgeOrder(usize),
    #[error("edge index {0} out of range")]
    NoSuchEdge(usize),
    #[error("ribbon graph is disconnected")]
    Disconnected,
    #[error("resolution tree root is split: the ribbon graph is disconnected")]
    SplitRoot,
    #[error("cannot contract loop edge {0}")]
    LoopContraction(usize),
    #[error("operation would leave an isolated vertex alongside other edges")]
    IsolatedVertex,
    #[error("edge subset is not a quasi-tree ({faces} boundary components)")]
    NotQuasiTree { faces: usize },
    #[error("{edges} edges exceed the size cap of {cap}")]
    SizeLimit { edges: usize, cap: usize },
    #[error("negative Y exponent after counting substitution (Y^{y} Z^{z})")]
    NegativeExponent { y: u32, z: u32 },
    #[error("polynomial parse error: {0}")]
    PolyParse(String),
    #[error("graph input error: {0}")]
    Input(String),
    #[error("methods disagree: {left_method} gives {left}, {right_method} gives {right}")]
    Mismatch {
        left_method: String,
        left: String,
        right_method: String,
        right: String,
    },
    #[error("dual quasi-tree correspondence failed: {0}")]
    BijectionFailure(String),
    #[error("duality identity failed at X={x}, Y={y}, Z={z}")]
    IdentityFailure { x: String, y: String, z: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
