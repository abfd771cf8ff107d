//! Multivariate polynomial reduction and Gröbner bases over the rationals.
//!
//! Besides the classic greatest-monomial reduction, normal forms can be
//! computed by *reduction machines*, which reduce each monomial of the input
//! independently and sum the irreducible results. With a selection strategy
//! that depends only on the power product being reduced, every engine and
//! every order of monomial choices yields the same normal form; the
//! [`reduction::enumerate_branches`] explorer checks this exhaustively on
//! small inputs.
//!
//! ```
//! use redmachine::prelude::*;
//!
//! let ring = Ring::new(["x", "y"]).unwrap();
//! let ord = OrderingSpec::new(MonomialOrder::GrLex, ring.clone());
//! let f = vec![
//!     parse_polynomial("x^2 + x - y", &ring).unwrap(),
//!     parse_polynomial("x - 2", &ring).unwrap(),
//! ];
//! let basis = Basis::new(f, ord).unwrap();
//! let g = parse_polynomial("x^3 + x^2*y + 2*y", &ring).unwrap();
//! let nf = Engine::Cached.reduce(&g, &basis, &Strategy::MaxLpp).unwrap();
//! assert_eq!(format_polynomial(&nf.normal_form, &ring, MonomialOrder::GrLex), "y^2 + y + 2");
//! ```

pub mod bench;
pub mod corpus;
pub mod engine;
pub mod error;
pub mod groebner;
pub mod machine;
pub mod ordering;
pub mod parse;
pub mod poly;
pub mod reduction;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::engine::Engine;
    pub use crate::error::{Error, Result};
    pub use crate::groebner::{
        buchberger, congruent, ideal_member, inter_reduce, is_groebner, reduced_groebner_basis,
        spol, GroebnerConfig, GroebnerResult, Mode,
    };
    pub use crate::machine::{run_cached_machine, run_machine, run_parallel_machine};
    pub use crate::ordering::{MonomialOrder, OrderingSpec};
    pub use crate::parse::{format_polynomial, parse_basis_file, parse_polynomial};
    pub use crate::poly::{Coefficient, Monomial, Polynomial, PowerProduct, Ring};
    pub use crate::reduction::{
        classic_reduce, enumerate_branches, is_normal_form, reduce_step, reduce_with_cofactors,
        Basis, SelectionStrategy, Strategy,
    };
}
