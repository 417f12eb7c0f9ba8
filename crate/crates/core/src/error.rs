use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("coefficient {0} is not representable in the field")]
    Unrepresentable(String),
    #[error("invalid field characteristic {0}")]
    InvalidField(u64),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("target degree {degree} is below the polynomial degree {required}")]
    DegreeTooSmall { degree: u32, required: u32 },
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("Macaulay colength did not stabilize up to degree {0}")]
    NotStabilized(u32),
    #[error("saturation did not stabilize within {0} quotient steps")]
    SaturationCap(usize),
    #[error("curve is not reduced")]
    NotReduced,
    #[error("characteristic {0} divides the curve degree {1}")]
    CharDividesDegree(u32, i64),
    #[error("no coordinate change put the singular points in shape position: {0}")]
    ShapePositionFailed(String),
    #[error("field too small: {0}")]
    FieldTooSmall(String),
    #[error("requires characteristic zero")]
    CharNotZero,
    #[error("Euler contraction x*A + y*B + z*C is not zero")]
    EulerViolated,
    #[error("all three form coefficients are zero")]
    AllZero,
    #[error("form coefficients are not homogeneous of one common degree")]
    DegreeMismatch,
    #[error("foliation has degree 0")]
    DegreeZero,
    #[error("random lines kept meeting the foliation degenerately")]
    DegenerateLine,
    #[error("no coordinate change made the Hamilton construction generic")]
    CoordinateSearchFailed,
    #[error("singular scheme has degree {found}, expected m^2+m+1 = {expected}")]
    SingularDegree { expected: u64, found: String },
    #[error("input error: {0}")]
    Input(String),
    #[error("internal error: {0}")]
    Internal(String),
}
