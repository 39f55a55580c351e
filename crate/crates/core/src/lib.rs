pub mod cli;
pub mod conjugacy;
pub mod error;
pub mod factorization;
pub mod orbits;
pub mod poly;
pub mod polymat;
pub mod scalar;
pub mod sl2;

pub use error::{Error, Result};
pub use poly::{Degree, Poly};
pub use polymat::{DiagPair, EWord, PolyMat2};
pub use scalar::{Field, Gaussian, Rational};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/standard-form.md")]
    mod standard_form {}
    #[doc = include_str!("../../../book/src/twisted-conjugacy.md")]
    mod twisted_conjugacy {}
    #[doc = include_str!("../../../book/src/modules.md")]
    mod modules {}
    #[doc = include_str!("../../../book/src/orbits.md")]
    mod orbits {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
