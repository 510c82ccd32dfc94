//! Free commutative λ-TD algebras `Ш_Λ(A)` over a base bialgebra `A`:
//! generalized shuffle products, the cocycle coproduct, counit, degree
//! filtration and right antipode, all over exact rational coefficients
//! polynomial in a formal weight `L`.

pub mod algebra;
pub mod base;
pub mod coalgebra;
pub mod coefficients;
pub mod error;
pub mod hopf;
pub mod linear;
pub mod products;
pub mod tensor;

pub use algebra::TdAlgebra;
pub use base::{BaseBialgebra, BaseElement, BaseSquare, Monomial, PolynomialBialgebra};
pub use coalgebra::{DefaultRule, LinearMapTable};
pub use coefficients::{Coefficient, ParseRationalError, Rational};
pub use error::{Error, Result};
pub use hopf::{Counterexample, HopfReport, LeftConvolution, Tally};
pub use linear::Combination;
pub use products::{
    free_extension, Ambient, BaseZeroTarget, FreeTarget, LawId, LawVerdict, LawViolation, OperatorId, TdTarget,
};
pub use tensor::{graft, Space, TensorElement, TensorSquare, TensorTriple, TensorWord, WordCombination};
