#include <basisforest/basis_descriptor.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace basisforest {

BasisDescriptor BasisDescriptor::leaf(unsigned degree, Continuity continuity)
{
  BasisDescriptor d;
  d.kind_ = Kind::Leaf;
  d.degree_ = degree;
  d.continuity_ = continuity;
  return d;
}

BasisDescriptor BasisDescriptor::power(BasisDescriptor child, std::size_t exponent,
                                       MergingStrategy strategy)
{
  BasisDescriptor d;
  d.kind_ = Kind::Power;
  d.exponent_ = exponent;
  d.strategy_ = strategy;
  d.children_.push_back(std::move(child));
  return d;
}

BasisDescriptor BasisDescriptor::composite(std::vector<BasisDescriptor> children,
                                           MergingStrategy strategy)
{
  BasisDescriptor d;
  d.kind_ = Kind::Composite;
  d.strategy_ = strategy;
  d.children_ = std::move(children);
  return d;
}

std::size_t BasisDescriptor::childCount() const
{
  switch (kind_) {
  case Kind::Leaf:
    return 0;
  case Kind::Power:
    return exponent_;
  case Kind::Composite:
    return children_.size();
  }
  return 0;
}

const BasisDescriptor& BasisDescriptor::child(std::size_t i) const
{
  if (i >= childCount())
    throw std::out_of_range("BasisDescriptor: child index out of range");
  return kind_ == Kind::Power ? children_[0] : children_[i];
}

std::size_t BasisDescriptor::depth() const
{
  if (kind_ == Kind::Leaf)
    return 1;
  std::size_t d = 0;
  for (const auto& c : children_)
    d = std::max(d, c.depth());
  return d + 1;
}

void BasisDescriptor::validate() const
{
  if (depth() > 4)
    throw std::invalid_argument("BasisDescriptor: tree deeper than 4 levels");

  switch (kind_) {
  case Kind::Leaf:
    if (degree_ > 3)
      throw std::invalid_argument("BasisDescriptor: degree out of range, supported range is 0..3");
    return;
  case Kind::Power:
    if (exponent_ < 1)
      throw std::invalid_argument("BasisDescriptor: power exponent must be at least 1");
    if (strategy_ == MergingStrategy::BlockedByEntity) {
      const BasisDescriptor& c = children_[0];
      if (c.kind() != Kind::Leaf || c.continuity() != Continuity::Continuous)
        throw std::invalid_argument(
            "BasisDescriptor: blockedByEntity needs a continuous Lagrange leaf child");
    }
    break;
  case Kind::Composite:
    if (children_.empty())
      throw std::invalid_argument("BasisDescriptor: composite node without children");
    if (strategyRequiresPowerNode(strategy_))
      throw std::invalid_argument("BasisDescriptor: " + std::string(strategyName(strategy_))
                                  + " is only defined on power nodes");
    break;
  }

  bool flat = strategy_ == MergingStrategy::FlatLexicographic
           || strategy_ == MergingStrategy::FlatInterleaved;
  for (std::size_t i = 0; i < children_.size(); ++i) {
    const BasisDescriptor& c = children_[i];
    if (flat && c.kind() == Kind::Leaf && c.continuity() == Continuity::Discontinuous)
      throw std::invalid_argument(
          "BasisDescriptor: a discontinuous leaf cannot sit under a flat-merging parent");
    c.validate();
  }
}

bool operator==(const BasisDescriptor& a, const BasisDescriptor& b)
{
  if (a.kind_ != b.kind_)
    return false;
  switch (a.kind_) {
  case BasisDescriptor::Kind::Leaf:
    return a.degree_ == b.degree_ && a.continuity_ == b.continuity_;
  case BasisDescriptor::Kind::Power:
    return a.exponent_ == b.exponent_ && a.strategy_ == b.strategy_
        && a.children_[0] == b.children_[0];
  case BasisDescriptor::Kind::Composite:
    return a.strategy_ == b.strategy_ && a.children_ == b.children_;
  }
  return false;
}

BasisDescriptor lagrange(unsigned degree)
{
  return BasisDescriptor::leaf(degree, Continuity::Continuous);
}

BasisDescriptor dg(unsigned degree)
{
  return BasisDescriptor::leaf(degree, Continuity::Discontinuous);
}

BasisDescriptor power(BasisDescriptor child, std::size_t exponent, MergingStrategy strategy)
{
  return BasisDescriptor::power(std::move(child), exponent, strategy);
}

BasisDescriptor composite(std::vector<BasisDescriptor> children, MergingStrategy strategy)
{
  return BasisDescriptor::composite(std::move(children), strategy);
}

namespace {

class Parser
{
public:
  explicit Parser(std::string_view text) : text_(text) {}

  BasisDescriptor run()
  {
    BasisDescriptor d = parseNode();
    skipWhitespace();
    if (pos_ != text_.size())
      throw ParseError(pos_, "unexpected trailing input");
    return d;
  }

private:
  void skipWhitespace()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek()
  {
    skipWhitespace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c)
  {
    if (peek() != c)
      throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view parseIdentifier()
  {
    skipWhitespace();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start)
      throw ParseError(start, "expected an identifier");
    return text_.substr(start, pos_ - start);
  }

  std::size_t parseNumber()
  {
    skipWhitespace();
    std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start)
      throw ParseError(start, "expected a number");
    return value;
  }

  MergingStrategy parseStrategyName()
  {
    skipWhitespace();
    std::size_t start = pos_;
    std::string_view name = parseIdentifier();
    if (auto s = parseStrategy(name))
      return *s;
    throw ParseError(start, "unknown strategy '" + std::string(name) + "'");
  }

  BasisDescriptor parseNode()
  {
    skipWhitespace();
    std::size_t start = pos_;
    std::string_view name = parseIdentifier();

    if (name == "lagrange" || name == "dg") {
      expect('(');
      skipWhitespace();
      std::size_t degreeOffset = pos_;
      std::size_t k = parseNumber();
      expect(')');
      if (k > 3)
        throw ParseError(degreeOffset, "degree out of range, supported range is 0..3");
      return name == "lagrange" ? lagrange(k) : dg(k);
    }

    if (name == "power") {
      expect('(');
      BasisDescriptor child = parseNode();
      expect(',');
      skipWhitespace();
      std::size_t countOffset = pos_;
      std::size_t n = parseNumber();
      if (n < 1)
        throw ParseError(countOffset, "power exponent must be at least 1");
      expect(',');
      MergingStrategy s = parseStrategyName();
      expect(')');
      return power(std::move(child), n, s);
    }

    if (name == "composite") {
      expect('(');
      std::vector<BasisDescriptor> children;
      MergingStrategy s{};
      while (true) {
        skipWhitespace();
        std::size_t itemOffset = pos_;
        if (isStrategyNext()) {
          if (children.empty())
            throw ParseError(itemOffset, "composite needs at least one child");
          s = parseStrategyName();
          expect(')');
          break;
        }
        children.push_back(parseNode());
        expect(',');
      }
      return composite(std::move(children), s);
    }

    throw ParseError(start, "expected lagrange, dg, power, or composite");
  }

  // A strategy name in child position terminates a composite child list.
  bool isStrategyNext()
  {
    skipWhitespace();
    std::size_t save = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      pos_ = save;
      return false;
    }
    std::string_view name = parseIdentifier();
    bool result = parseStrategy(name).has_value() && peek() == ')';
    pos_ = save;
    return result;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void printNode(const BasisDescriptor& d, std::ostringstream& os)
{
  switch (d.kind()) {
  case BasisDescriptor::Kind::Leaf:
    os << (d.continuity() == Continuity::Continuous ? "lagrange(" : "dg(") << d.degree() << ')';
    return;
  case BasisDescriptor::Kind::Power:
    os << "power(";
    printNode(d.child(0), os);
    os << ',' << d.exponent() << ',' << strategyName(d.strategy()) << ')';
    return;
  case BasisDescriptor::Kind::Composite:
    os << "composite(";
    for (std::size_t i = 0; i < d.childCount(); ++i) {
      printNode(d.child(i), os);
      os << ',';
    }
    os << strategyName(d.strategy()) << ')';
    return;
  }
}

} // namespace

BasisDescriptor parseDescriptor(std::string_view text)
{
  return Parser(text).run();
}

std::string printDescriptor(const BasisDescriptor& descriptor)
{
  std::ostringstream os;
  printNode(descriptor, os);
  return os.str();
}

} // namespace basisforest
