//! Quaternion-valued dense linear algebra.
//!
//! Quaternion multiplication does not commute, so a matrix product has to say
//! in which order the scalars of each inner product are multiplied. This crate
//! provides both orders, `·L` ([`QuatMatrix::mul_left`]) and `·R`
//! ([`QuatMatrix::mul_right`]), and builds on them: left/right inverses via
//! complex adjoint embeddings, the eight fundamental subspaces, left/right
//! Kronecker and Khatri-Rao products, a widely-linear solver, right
//! eigendecompositions and the three discrete quaternion Fourier transforms.

pub mod adjoint;
pub mod complex;
pub mod error;
pub mod io;
pub mod qdft;
pub mod qmat;
pub mod quat;
pub mod spectral;
pub mod subspace;
pub mod tensor;
pub mod text;
pub mod widely_linear;

pub use adjoint::{adjoint, from_adjoint, inv_left, inv_right, AdjointSide, Axes};
pub use complex::{ComplexMatrix, EigenResult};
pub use error::{Error, Result};
pub use qmat::{ProductOrder, QuatMatrix, TripleOrder};
pub use quat::{are_orthogonal, ComplexPair, PolarForm, PureUnitQuaternion, Quaternion, SymplecticParts};
pub use io::{read_qmat, write_qmat};
pub use qdft::{dqft, fourier_matrix, idqft, FourierMatrix, QdftKind};
pub use spectral::{right_eig, LeftEigenPair, RightEigenDecomposition};
pub use subspace::{ScalarSide, SubspaceBasis, SubspaceKind};
pub use tensor::{khatri_rao, kron, VecForm};
pub use widely_linear::WidelyLinearSystem;
