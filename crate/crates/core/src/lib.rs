pub mod arith;
pub mod cli;
pub mod congruence;
pub mod dissection;
pub mod partitions;
pub mod series;
pub mod theta;
