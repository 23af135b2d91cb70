pub mod critical;
pub mod k0;
pub mod measure;
pub mod potential;
