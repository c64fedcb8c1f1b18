pub mod cli;
pub mod exactla;
pub mod hopfstruct;
pub mod nck;
pub mod pairing;
pub mod ratseries;
