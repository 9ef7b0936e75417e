pub mod format;
pub mod gen;
pub mod geometry;
pub mod linalg;
pub mod oracle;
pub mod problem;
pub mod reduction;
pub mod space;
pub mod strip;
