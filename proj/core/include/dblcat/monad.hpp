#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dblcat/finset.hpp"
#include "dblcat/law_report.hpp"

namespace dblcat {

// A monad on finite sets given pointwise. Elements of T n are numbered 0..|T n|-1.
// Maps are image vectors; their domain is the vector length.
class Monad {
 public:
  virtual ~Monad() = default;
  virtual std::string name() const = 0;
  // |T n|, or nothing when it does not fit in 64 bits.
  virtual std::optional<std::uint64_t> carrier(std::uint64_t n) const = 0;
  // (T f)(t) for f : dom -> cod and t in T dom.
  virtual std::uint64_t map(const std::vector<std::uint64_t>& f, std::uint64_t cod, std::uint64_t t) const = 0;
  virtual std::uint64_t unit(std::uint64_t n, std::uint64_t a) const = 0;
  // join_n : T T n -> T n
  virtual std::uint64_t join(std::uint64_t n, std::uint64_t tt) const = 0;
};

using MonadPtr = std::shared_ptr<const Monad>;

class IdentityMonad final : public Monad {
 public:
  std::string name() const override { return "identity"; }
  std::optional<std::uint64_t> carrier(std::uint64_t n) const override { return n; }
  std::uint64_t map(const std::vector<std::uint64_t>& f, std::uint64_t, std::uint64_t t) const override {
    return f.at(t);
  }
  std::uint64_t unit(std::uint64_t, std::uint64_t a) const override { return a; }
  std::uint64_t join(std::uint64_t, std::uint64_t tt) const override { return tt; }
};

// Subsets as bitmasks.
class PowersetMonad final : public Monad {
 public:
  std::string name() const override { return "powerset"; }
  std::optional<std::uint64_t> carrier(std::uint64_t n) const override;
  std::uint64_t map(const std::vector<std::uint64_t>& f, std::uint64_t cod, std::uint64_t t) const override;
  std::uint64_t unit(std::uint64_t n, std::uint64_t a) const override;
  std::uint64_t join(std::uint64_t n, std::uint64_t tt) const override;
};

// T n = n + E; element n + e is the exception e.
class ExceptionMonad final : public Monad {
 public:
  explicit ExceptionMonad(std::uint64_t exceptions) : exceptions_(exceptions) {}
  std::string name() const override { return "exception"; }
  std::optional<std::uint64_t> carrier(std::uint64_t n) const override { return n + exceptions_; }
  std::uint64_t map(const std::vector<std::uint64_t>& f, std::uint64_t cod, std::uint64_t t) const override;
  std::uint64_t unit(std::uint64_t, std::uint64_t a) const override { return a; }
  std::uint64_t join(std::uint64_t n, std::uint64_t tt) const override;
  std::uint64_t exceptions() const { return exceptions_; }

 private:
  std::uint64_t exceptions_;
};

// Largest carrier the validator enumerates; larger instances are counted as skipped.
inline constexpr std::uint64_t kMonadEnumerationCap = std::uint64_t{1} << 20;

// Functoriality over the morphisms of c, naturality of unit and join, unit and associativity laws.
LawReport validate_monad(const Monad& t, const FinSetCategory& c);

// t in T y, k : y -> T z. Returns join_z((T k)(t)).
std::uint64_t kleisli_extend(const Monad& t, const std::vector<std::uint64_t>& k, std::uint64_t z,
                             std::uint64_t elem);
// h : x -> T y then k : y -> T z.
std::vector<std::uint64_t> kleisli_compose(const Monad& t, const std::vector<std::uint64_t>& h,
                                           const std::vector<std::uint64_t>& k, std::uint64_t z);
// Same, reusing the storage of out.
void kleisli_compose_into(const Monad& t, const std::vector<std::uint64_t>& h, const std::vector<std::uint64_t>& k,
                          std::uint64_t z, std::vector<std::uint64_t>& out);

}  // namespace dblcat
