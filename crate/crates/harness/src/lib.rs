pub mod campaign;
pub mod canon;
pub mod cli;
pub mod corpus;
pub mod enumerate;
pub mod random;
pub mod report;
