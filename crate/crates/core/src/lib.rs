pub mod arborescence;
pub mod digraph;
pub mod error;
pub mod format;
pub mod graycode;
pub mod instances;
pub mod oracle;
pub mod parity;
pub mod strategy;
