pub mod algebra;
pub mod corpus;
pub mod hopf;
pub mod linalg;
pub mod repn;
pub mod rewrite;
pub mod specmap;
