pub mod bundles;
pub mod cli;
pub mod geom;
pub mod obstruct;
pub mod poly;
pub mod ring;
