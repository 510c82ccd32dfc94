use thiserror::Error;

use crate::coefficients::Coefficient;
use crate::tensor::{Space, TensorWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot combine an element of {left} with an element of {right} without an explicit embedding")]
    SpaceMismatch { left: Space, right: Space },

    #[error("the empty word (a scalar component) is not an element of Ш_Λ")]
    EmptyWordInLambda,

    #[error("monomial has {found} generators, the algebra has {expected}")]
    VarsMismatch { expected: usize, found: usize },

    #[error("degree is defined on non-empty words only")]
    EmptyWordDegree,

    #[error("reduced coproduct needs an element of ker ε, counit is {0}")]
    NonzeroCounit(Coefficient),

    #[error("linear map has no value for word {0} and no default rule")]
    UnassignedWord(TensorWord),

    #[error("antipode recursion invariant violated: right factor {factor} of Δ̃({word}) has degree {factor_degree}, not below {word_degree}")]
    DegreeNotDecreasing {
        word: TensorWord,
        factor: TensorWord,
        word_degree: u32,
        factor_degree: u32,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
