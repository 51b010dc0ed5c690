pub mod error;
pub mod fso_channel;
pub mod metrics;
pub mod montecarlo;
pub mod quad;
pub mod rf_channel;
pub mod runner;
pub mod scalar;
pub mod specfun;

/// Double-precision forms of the generic types.
pub type MeijerG = specfun::MeijerGSpec<f64>;
pub type RfParams = rf_channel::RfParams<f64>;
pub type RfDerived = rf_channel::RfDerived<f64>;
pub type FsoParams = fso_channel::FsoParams<f64>;
pub type FsoDerived = fso_channel::FsoDerived<f64>;
pub type Scenario = metrics::ScenarioConfig<f64>;
pub type SecrecyResult = metrics::SecrecyResult<f64>;
