pub mod bench;
pub mod gen;
pub mod io;
pub mod report;
