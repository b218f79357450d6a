use crate::cartan::TypeLabel;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {label}")]
    InvalidRank { label: TypeLabel, rank: usize },
    #[error("node index {0} out of range 1..={1}")]
    NodeOutOfRange(usize, usize),
    #[error("node {0} is not a minuscule node of this datum")]
    NotMinuscule(usize),
    #[error("weight is not a vertex of the crystal")]
    NotAVertex,
    #[error("path materialization cap {cap} exceeded: vertex has {count} paths")]
    PathCapExceeded { cap: u64, count: u64 },
    #[error("invalid shifted box ({0},{1}): row index exceeds column index")]
    InvalidBox(usize, usize),
    #[error("partition parts must be strictly decreasing and positive")]
    NotStrict,
    #[error("first part {0} exceeds bound {1}")]
    PartTooLarge(usize, usize),
    #[error("index sequences are not rearrangements of each other")]
    NotRearrangement,
    #[error("label index {0} out of range for module of dimension {1}")]
    LabelOutOfRange(usize, usize),
    #[error("basis element is not an elementary matrix: {0}")]
    NotElementary(String),
    #[error("weight has no integral expression in simple roots")]
    NotInRootLattice,
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
