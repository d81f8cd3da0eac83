pub mod diagram;
pub mod linalg;
pub mod dga;
pub mod invariants;
pub mod obstruct;
