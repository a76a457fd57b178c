pub mod cli;
pub mod criterion;
pub mod entire;
pub mod hermite;
pub mod jacobi;
pub mod product;
pub mod quadrature;
pub mod roots;
pub mod space;
pub mod zeros;
