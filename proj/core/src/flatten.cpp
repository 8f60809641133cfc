#include "waring/flatten.hpp"

namespace waring {

// Explicit instantiations for the exact fields the tools use.
template struct Catalecticant<Rational>;
template struct Catalecticant<GaussianRational>;
template Catalecticant<Rational> catalecticant(const Poly<Rational>&, int);
template Catalecticant<GaussianRational> catalecticant(const Poly<GaussianRational>&, int);
template int span_dim(const Poly<Rational>&);
template int span_dim(const Poly<GaussianRational>&);
template FlatteningBound flattening_lower_bound(const Poly<Rational>&);
template FlatteningBound flattening_lower_bound(const Poly<GaussianRational>&);
template SpanReduction<Rational> reduce_to_span(const Poly<Rational>&);
template SpanReduction<GaussianRational> reduce_to_span(const Poly<GaussianRational>&);

}  // namespace waring
