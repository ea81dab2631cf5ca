#include "smoothcvx/adversary/sequence.hpp"

#include <string>

#include "smoothcvx/core/errors.hpp"

namespace smoothcvx {

LossSequence::LossSequence(std::string kind, std::size_t rounds, std::size_t dim, Generator gen,
                           double declared_egv)
    : kind_(std::move(kind)), T_(rounds), dim_(dim), gen_(std::move(gen)), egv_(declared_egv) {
  if (T_ == 0) throw ConfigError("a loss sequence needs T >= 1");
  if (!gen_) throw ConfigError("a loss sequence needs a generator");
}

RoundLoss LossSequence::at(std::size_t t) const {
  if (t == 0 || t > T_)
    throw InputError("round " + std::to_string(t) + " outside 1.." + std::to_string(T_));
  return gen_(t);
}

}  // namespace smoothcvx
