pub mod cli;
pub mod levels;
pub mod linalg;
pub mod pencil;
pub mod poly;
pub mod projective;
pub mod rat;
pub mod sections;
pub mod symplectic;
