pub mod chern;
pub mod chow;
pub mod classify;
pub mod cohomology;
pub mod figure;
pub mod json;
pub mod report;
pub mod variety;
pub mod verify;
