#include "torhyp/tables.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace torhyp {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Hyperbolic:
      return "Hyperbolic";
    case Outcome::NotHyperbolic:
      return "NotHyperbolic";
    case Outcome::Open:
      return "Open";
    case Outcome::Unlisted:
      return "Unlisted";
  }
  return "Unlisted";
}

Outcome parse_outcome(std::string_view text) {
  for (Outcome o : {Outcome::Hyperbolic, Outcome::NotHyperbolic, Outcome::Open, Outcome::Unlisted})
    if (text == to_string(o)) return o;
  throw ParameterError("unknown outcome '" + std::string(text) + "'");
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

long to_long(std::string_view s) {
  if (s.empty()) throw ParameterError("missing number in predicate");
  std::size_t pos = 0;
  const std::string str(s);
  long v = 0;
  try {
    v = std::stol(str, &pos);
  } catch (const std::exception&) {
    throw ParameterError("bad number '" + str + "'");
  }
  if (pos != str.size()) throw ParameterError("bad number '" + str + "'");
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

bool IntPredicate::holds(long x) const {
  switch (kind) {
    case Kind::Any:
      return true;
    case Kind::Eq:
      return x == values.at(0);
    case Kind::Le:
      return x <= values.at(0);
    case Kind::Ge:
      return x >= values.at(0);
    case Kind::In:
      return std::find(values.begin(), values.end(), x) != values.end();
  }
  return false;
}

std::string IntPredicate::to_string() const {
  switch (kind) {
    case Kind::Any:
      return "*";
    case Kind::Eq:
      return "=" + std::to_string(values.at(0));
    case Kind::Le:
      return "<=" + std::to_string(values.at(0));
    case Kind::Ge:
      return ">=" + std::to_string(values.at(0));
    case Kind::In: {
      std::string s = "in{";
      for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + std::to_string(values[i]);
      return s + "}";
    }
  }
  return "*";
}

IntPredicate parse_predicate(std::string_view text) {
  const std::string s = strip(text);
  IntPredicate p;
  if (s.empty() || s == "*") return p;
  auto rest = [&](std::size_t n) { return std::string_view(s).substr(n); };
  if (s.rfind(">=", 0) == 0) {
    p.kind = IntPredicate::Kind::Ge;
    p.values = {to_long(rest(2))};
  } else if (s.rfind("<=", 0) == 0) {
    p.kind = IntPredicate::Kind::Le;
    p.values = {to_long(rest(2))};
  } else if (s[0] == '>') {
    p.kind = IntPredicate::Kind::Ge;
    p.values = {to_long(rest(1)) + 1};
  } else if (s[0] == '<') {
    p.kind = IntPredicate::Kind::Le;
    p.values = {to_long(rest(1)) - 1};
  } else if (s[0] == '=') {
    p.kind = IntPredicate::Kind::Eq;
    p.values = {to_long(rest(1))};
  } else if (s.rfind("in{", 0) == 0 && s.back() == '}') {
    p.kind = IntPredicate::Kind::In;
    for (const auto& v : split(s.substr(3, s.size() - 4), ',')) p.values.push_back(to_long(v));
  } else {
    p.kind = IntPredicate::Kind::Eq;
    p.values = {to_long(s)};
  }
  return p;
}

std::vector<IntPredicate> parse_region(std::string_view text) {
  std::string s = strip(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ParameterError("region must be parenthesized: '" + std::string(text) + "'");
  s = s.substr(1, s.size() - 2);
  auto parts = split(s, ',');
  if (!parts.empty() && parts.back().empty()) parts.pop_back();
  std::vector<IntPredicate> out;
  for (const auto& p : parts) out.push_back(parse_predicate(p));
  return out;
}

bool region_holds(const std::vector<IntPredicate>& region, const std::vector<long>& coords) {
  if (region.size() != coords.size()) return false;
  for (std::size_t i = 0; i < region.size(); ++i)
    if (!region[i].holds(coords[i])) return false;
  return true;
}

bool condition_holds(std::string_view condition, const FamilySpec& spec) {
  const std::string s = strip(condition);
  if (s.empty() || s == "-") return true;
  for (const auto& alt : split(s, '|')) {
    bool ok = true;
    for (const auto& clause : split(alt, ',')) {
      std::size_t k = 0;
      while (k < clause.size() && (std::isalnum(static_cast<unsigned char>(clause[k])) != 0)) ++k;
      const std::string name = clause.substr(0, k);
      const IntPredicate p = parse_predicate(clause.substr(k));
      const Int& v = spec.param(name);
      if (!v.fits_slong_p() || !p.holds(v.get_si())) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool TableRow::matches(const std::vector<long>& coords, const FamilySpec& spec) const {
  if (!condition.empty() && !condition_holds(condition, spec)) return false;
  if (!permutations) return region_holds(region, coords);
  std::vector<long> c = coords;
  std::sort(c.begin(), c.end());
  do {
    if (region_holds(region, c)) return true;
  } while (std::next_permutation(c.begin(), c.end()));
  return false;
}

namespace {

struct RowSpec {
  Outcome outcome;
  std::string region;
  bool perm = false;
  std::string condition = {};
  bool ambiguous = false;
  std::string note = {};
};

TableBlock block(std::string condition, std::vector<RowSpec> rows, bool prior = false) {
  TableBlock b;
  b.condition = std::move(condition);
  b.prior_literature = prior;
  for (auto& r : rows) {
    TableRow t;
    t.outcome = r.outcome;
    t.printed = r.region;
    t.region = parse_region(r.region);
    t.permutations = r.perm;
    t.condition = r.condition;
    t.ambiguous = r.ambiguous;
    t.note = r.note;
    b.rows.push_back(std::move(t));
  }
  return b;
}

constexpr Outcome H = Outcome::Hyperbolic;
constexpr Outcome N = Outcome::NotHyperbolic;
constexpr Outcome O = Outcome::Open;

std::string ge(long v) { return ">=" + std::to_string(v); }

std::vector<TableBlock> blocks_201() {
  return {
      block("l=0", {{H, "(>=3,>=4)"}, {H, "(=2,>=5)"}, {N, "(<=1,>=0)"}, {N, "(>=0,<=3)"}, {N, "(=2,=4)"}}, true),
      block("l=1",
            {{H, "(>=3,>=4)"},
             {H, "(=2,>=5)"},
             {H, "(>=5,=0)"},
             {N, "(<=1,>=0)"},
             {N, "(>=0,in{1,2,3})"},
             {N, "(<=4,=0)"}},
            true),
      block("l=2", {{H, "(>=3,>=4)"},
                    {H, "(=2,>=7)"},
                    {H, "(>=4,=0)"},
                    {N, "(<=1,>=0)"},
                    {N, "(>=0,in{1,2,3})"},
                    {N, "(=2,=0)"},
                    {O, "(=2,in{4,5,6})"},
                    {O, "(=3,=0)"}}),
      block("l=3", {{H, "(>=3,>=4)"},
                    {H, "(=2,>=7)"},
                    {H, "(>=4,=0)"},
                    {N, "(<=1,>=0)"},
                    {N, "(>=0,in{1,2,3})"},
                    {O, "(=2,in{4,5,6})"},
                    {O, "(in{2,3},=0)"}}),
      block("l>=4", {{H, "(>=3,>=4)"},
                     {H, "(=2,>=7)"},
                     {H, "(>=3,=0)"},
                     {N, "(<=1,>=0)"},
                     {N, "(>=0,in{1,2,3})"},
                     {O, "(=2,in{4,5,6})"},
                     {O, "(=2,=0)"}}),
  };
}

std::vector<TableBlock> blocks_202() {
  return {
      block("l1=0,l2=0", {{H, "(>=4,>=3)"}, {H, "(>=5,=2)"}, {N, "(<=3,>=0)"}, {N, "(>=0,<=1)"}, {N, "(=4,=2)"}},
            true),
      block("l1=0,l2>=1", {{H, "(>=5,>=2)"}, {N, "(<=3,>=0)"}, {N, "(>=0,<=1)"}, {O, "(=4,>=2)"}}),
      block("l1>=1", {{H, "(>=5,>=0)"}, {N, "(<=3,>=0)"}, {O, "(=4,>=0)"}}),
  };
}

std::vector<TableBlock> blocks_301(const FamilySpec& s) {
  const long r = s.p("r");
  const long a = s.p("a");
  const long b = s.p("b");
  const std::string perm_note = "footnote 3 permutations applied to a row with a fixed coordinate";
  std::vector<TableBlock> out;
  out.push_back(block("r=0,a=0,b=0",
                      {{H, "(>=3,>=3,>=3)", true},
                       {H, "(=2,>=4,>=4)", true, "", true, perm_note},
                       {N, "(<=1,>=0,>=0)", true},
                       {N, "(=2,<=3,>=0)"}},
                      true));
  out.push_back(block("r>=1,a=0,b=0",
                      {{H, "(>=2,>=3,>=3)"},
                       {H, "(>=3,>=4,=2)"},
                       {H, "(" + ge(2 + (r == 1 ? 1 : 0)) + ",=2,>=4)"},
                       {N, "(<=1,>=0,>=0)", true},
                       {N, "(>=0,=2,in{2,3})"},
                       {N, "(>=0,=3,=2,)"},
                       {N, "(=2,>=0,=2)"},
                       {N, "(=2,=2,>=1)", false, "r=1"}},
                      true));
  // "If e,f >= 2 and not in the next column".
  TableBlock general = block("-", {{H, "(" + ge(4 - a - r) + "," + ge(std::max(4 - b, 2L)) + ",>=3)"},
                                   {H, "(" + ge(4 - a - r) + "," + ge(std::max(3 - b, 2L)) + ",>=4)"},
                                   {H, "(" + ge(3 - a - r) + "," + ge(std::max(4 - b, 2L)) + ",>=4)"},
                                   {N, "(<=0,<=1,>=0)"},
                                   {N, "(>=0,>=0,<=1)"},
                                   {N, "(>=0,=2,=2)", false, "b=0"},
                                   {N, "(=1,>=0,>=0)", false, "a=0"},
                                   {N, "(=2,>=0,=2)", false, "a=0"},
                                   {N, "(<=1,>=0,=2)", false, "a=1"},
                                   {N, "(=0,>=0,=2)", false, "a=2"},
                                   {N, "(<=1,>=0,>=0)", false, "r=0"},
                                   {N, "(=2,=2,>=0)", false, "r=0"},
                                   {N, "(<=1,=2,>=0)", false, "r=1"},
                                   {N, "(=0,=2,>=0)", false, "r=2"}});
  general.condition = "General";
  general.open_by_omission = true;
  general.not_hyp_precedence = true;
  out.push_back(std::move(general));
  out.push_back(block("r>=3,a>=3,b>=1",
                      {{H, "(>=0,>=2,>=3)"}, {N, "(>=0,<=1,>=0)"}, {N, "(>=0,>=0,<=1)"}, {O, "(>=0,>=2,=2)"}}));
  return out;
}

std::vector<TableBlock> blocks_302() {
  const RowSpec hyp{H, "(>=4,>=2,>=4)"};
  const RowSpec f1{N, "(>=0,>=0,<=1)"};
  const RowSpec e1{N, "(>=0,<=1,>=0)"};
  return {
      block("r=0,a=0", {hyp, f1, e1, {N, "(<=1,>=2,>=2)"}, {N, "(=2,=2,>=2)"}, {N, "(=2,>=2,=2)"},
                        {O, "(=2,>=3,>=3)"}, {O, "(=3,>=2,>=2)"}, {O, "(>=4,>=2,in{2,3})"}}),
      block("r=0,a>=1",
            {hyp, f1, e1, {N, "(<=1,>=2,>=2)"}, {O, "(in{2,3},>=2,>=2)"}, {O, "(>=4,>=2,in{2,3})"}}),
      block("r>=1,a=0", {hyp, f1, e1, {N, "(<=1,>=2,>=2)"}, {N, "(=2,>=2,=2)"}, {O, "(=2,>=2,>=3)"},
                         {O, "(=3,>=2,>=2)"}, {O, "(>=4,>=2,=3)"}}),
      block("r>=1,a=1", {hyp, f1, e1, {N, "(<=1,>=2,=2)"}, {O, "(<=3,>=2,>=3)"}, {O, "(>=4,>=2,in{2,3})"}}),
      block("r>=1,a=2", {hyp, f1, e1, {N, "(=0,>=2,=2)"}, {O, "(=0,>=2,>=3)"}, {O, "(in{1,2,3},>=2,>=2)"},
                         {O, "(>=4,>=2,in{2,3})"}}),
      block("r>=1,a>=3", {hyp, f1, e1, {O, "(<=3,>=2,>=2)"}, {O, "(>=4,>=2,in{2,3})"}}),
  };
}

std::vector<TableBlock> blocks_311() {
  const std::vector<RowSpec> hyp{{H, "(>=4,>=3,>=2)"}, {H, "(>=4,=2,>=3)"}, {H, "(>=4,=0,>=5)"}};
  const std::vector<RowSpec> nh{{N, "(in{1,2,3},>=0,>=0)"}, {N, "(>=0,>=0,<=1)"}, {N, "(>=0,=1,>=0)"}};
  const std::vector<RowSpec> op{{O, "(>=4,=2,=2)"}, {O, "(>=4,=0,in{2,3,4})"}};
  auto make = [&](const std::string& cond, std::vector<RowSpec> extra) {
    std::vector<RowSpec> rows = hyp;
    rows.insert(rows.end(), nh.begin(), nh.end());
    rows.insert(rows.end(), op.begin(), op.end());
    rows.insert(rows.end(), extra.begin(), extra.end());
    return block(cond, rows);
  };
  return {
      make("b1=0", {{N, "(=0,=0,<=3)"}, {N, "(=0,>=2,<=3)"}, {O, "(=0,>=2,>=4)"}, {O, "(0,=0,>=4)"}}),
      make("b1=1", {{N, "(=0,=0,<=2)"}, {N, "(=0,>=2,<=2)"}, {O, "(=0,>=2,>=3)"}, {O, "(0,=0,>=3)"}}),
      make("b1>=2", {{O, "(=0,>=2,>=2)"}, {O, "(0,=0,>=2)"}}),
  };
}

std::vector<TableBlock> blocks_312() {
  const std::string note = "rows with d=0, e>=4 disagree across the b1 blocks";
  return {
      block("b1=0", {{H, "(>=4,>=4,>=1)"},
                     {N, "(in{1,2,3},>=0,>=0)"},
                     {N, "(>=0,in{1,2,3},>=0)"},
                     {N, "(0,>=4,<=1)", false, "", true, note},
                     {N, "(>=4,0,<=1)"},
                     {N, "(0,0,<=3)"},
                     {O, "(>=4,>=4,=0)"},
                     {O, "(0,>=4,>=2)", false, "", true, note},
                     {O, "(>=4,=0,>=2)"},
                     {O, "(0,0,>=4)"}}),
      block("b1=1", {{H, "(>=4,>=4,>=1)"},
                     {N, "(in{1,2,3},>=0,>=0)"},
                     {N, "(>=0,in{1,2,3},>=0)"},
                     {N, "(>=4,=0,<=1)"},
                     {N, "(=0,=0,<=2)"},
                     {O, "(>=4,>=4,=0)"},
                     {O, "(0,>=4,>=0)", false, "", true, note},
                     {O, "(>=4,=0,>=2)"},
                     {O, "(=0,=0,>=3)"}}),
      block("b1>=2", {{H, "(>=4,>=4,>=1)"},
                      {N, "(in{1,2,3},>=0,>=0)"},
                      {N, "(>=0,in{1,2,3},>=0)"},
                      {N, "(>=4,=0,<=1)"},
                      {N, "(=0,=0,<=1)"},
                      {O, "(>=4,>=4,=0)"},
                      {O, "(0,>=4,>=0)", false, "", true, note},
                      {O, "(>=4,=0,>=2)"},
                      {O, "(=0,=0,>=2)"}}),
  };
}

std::vector<TableBlock> blocks_313() {
  return {
      block("c2=0", {{H, "(>=2,>=4,>=2)"},
                     {N, "(>=0,in{1,2,3},>=0)"},
                     {N, "(>=0,>=0,<=1)"},
                     {N, "(<=1,>=4,>=2)"},
                     {N, "(>=0,=0,<=3)"},
                     {N, "(<=1,=0,>=0)"},
                     {O, "(>=2,=0,>=4)"}}),
      block("b1=0,c2=1", {{H, "(>=1,>=4,>=2)"},
                          {N, "(>=0,in{1,2,3},>=0)"},
                          {N, "(>=0,>=0,<=1)"},
                          {N, "(>=0,=0,<=3)"},
                          {O, "(=0,>=4,>=2)"},
                          {O, "(>=0,=0,>=4)"}}),
      block("b1=0,c2>=2|b1>=1,c2>=1", {{H, "(>=0,>=4,>=2)"},
                                       {N, "(>=0,in{1,2,3},>=0)"},
                                       {N, "(>=0,>=0,<=1)"},
                                       {N, "(>=0,=0,<=3)"},
                                       {O, "(>=0,=0,>=4)"}}),
  };
}

std::vector<TableBlock> blocks_314() {
  const std::vector<RowSpec> nh{{N, "(>=0,>=0,in{1,2,3})"}, {N, "(>=0,<=1,>=0)"}, {N, "(>=0,<=3,=0)"}};
  auto rows = [&](std::vector<RowSpec> head, std::vector<RowSpec> tail) {
    head.insert(head.end(), nh.begin(), nh.end());
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
  };
  return {
      block("b1=0,b2=0",
            rows({{H, "(>=1,>=2,>=4)"}}, {{N, "(<=1,>=0,=0)"}, {O, "(=0,>=2,>=4)"}, {O, "(>=2,>=4,=0)"}})),
      block("b1>=1,b2=0|b1=0,b2>=1", rows({{H, "(>=0,>=2,>=4)"}}, {{N, "(<=1,>=0,=0)"}, {O, "(>=2,>=4,=0)"}})),
      block("b1>=1,b2>=1", rows({{H, "(>=0,>=2,>=4)"}}, {{O, "(>=0,>=4,=0)"}})),
  };
}

std::vector<TableBlock> blocks_315() {
  return {block("-", {{H, "(>=2,>=0,>=5)"},
                      {H, "(>=2,>=1,=4)"},
                      {N, "(>=0,>=0,in{1,2,3})"},
                      {N, "(in{0,1},>=0,>=0)"},
                      {N, "(in{2,3},>=0,=0)"},
                      {N, "(>=0,in{0,1},=0)"},
                      {O, "(>=2,=0,=4)"},
                      {O, "(>=4,>=2,=0)"}})};
}

}  // namespace

std::vector<TableBlock> table_blocks(const FamilySpec& spec) {
  spec.validate();
  switch (spec.id) {
    case CaseId::C201:
      return blocks_201();
    case CaseId::C202:
      return blocks_202();
    case CaseId::C301:
      return blocks_301(spec);
    case CaseId::C302:
      return blocks_302();
    case CaseId::C311:
      return blocks_311();
    case CaseId::C312:
      return blocks_312();
    case CaseId::C313:
      return blocks_313();
    case CaseId::C314:
      return blocks_314();
    case CaseId::C315:
      return blocks_315();
  }
  throw ParameterError("unhandled case");
}

TableLookup table_lookup(const FamilySpec& spec, const std::vector<long>& coords) {
  TableLookup out;
  const auto blocks = table_blocks(spec);
  std::vector<const TableBlock*> active;
  for (const auto& b : blocks)
    if (b.condition != "General" && condition_holds(b.condition, spec)) active.push_back(&b);
  if (active.empty())
    for (const auto& b : blocks)
      if (b.condition == "General") active.push_back(&b);

  std::set<Outcome> outcomes;
  for (const TableBlock* b : active) {
    out.prior_literature = out.prior_literature || b->prior_literature;
    std::vector<const TableRow*> hits;
    for (const auto& r : b->rows)
      if (r.matches(coords, spec)) hits.push_back(&r);
    if (b->not_hyp_precedence &&
        std::any_of(hits.begin(), hits.end(), [](const TableRow* r) { return r->outcome == N; }))
      std::erase_if(hits, [](const TableRow* r) { return r->outcome == H; });
    for (const TableRow* r : hits) {
      outcomes.insert(r->outcome);
      std::string m = to_string(r->outcome) + " " + r->printed;
      if (r->permutations) m += " (any permutation)";
      if (!r->condition.empty()) m += " if " + r->condition;
      out.matched.push_back(m);
      if (r->ambiguous) {
        out.ambiguous = true;
        out.notes.push_back(r->note);
      }
    }
    if (hits.empty() && b->open_by_omission) {
      out.open_by_omission = true;
      outcomes.insert(O);
    }
  }
  if (outcomes.empty()) {
    out.outcome = Outcome::Unlisted;
  } else {
    out.outcome = *outcomes.begin();
    if (outcomes.size() > 1) {
      out.conflict = true;
      out.ambiguous = true;
      out.notes.push_back("matching rows disagree");
    }
  }
  return out;
}

std::optional<Outcome> figure2_outcome(long l, long a, long b) {
  struct Rect {
    long a0, b0, a1, b1;
    Outcome o;
  };
  std::vector<Rect> rects;
  std::vector<std::pair<long, long>> open_dots;
  if (l == 0) {
    rects = {{0, 0, 1, 8, N}, {0, 0, 2, 4, N}, {0, 0, 8, 3, N}, {2, 5, 8, 8, H}, {3, 4, 8, 8, H}};
  } else if (l == 2) {
    // The green strip (4,0)-(8,0.5) contains lattice points with b = 0 only.
    rects = {{0, 0, 1, 8, N}, {0, 1, 8, 3, N}, {1, 0, 2, 1, N}, {3, 4, 8, 8, H}, {4, 0, 8, 0, H}, {2, 7, 8, 8, H}};
    open_dots = {{2, 4}, {3, 0}, {2, 5}, {2, 6}};
  } else {
    return std::nullopt;
  }
  if (a < 0 || b < 0 || a > 8 || b > 8) return std::nullopt;
  for (const auto& [x, y] : open_dots)
    if (x == a && y == b) return Outcome::Open;
  for (const auto& r : rects)
    if (a >= r.a0 && a <= r.a1 && b >= r.b0 && b <= r.b1) return r.o;
  return Outcome::Unlisted;
}

PrintedMatrix printed_gale_matrix(const FamilySpec& spec) {
  spec.validate();
  auto P = [&](const char* n) { return spec.param(n); };
  auto rows = [](std::vector<IntVec> r) { return IntMat::from_rows(r, r.front().size()); };
  const Int z(0);
  const Int o(1);
  switch (spec.id) {
    case CaseId::C201:
      return {rows({{o, o, z, z, z}, {-P("l"), z, o, o, o}}), ""};
    case CaseId::C202:
      return {rows({{o, o, o, z, z}, {-P("l1"), -P("l2"), z, o, o}}), ""};
    case CaseId::C301:
    case CaseId::C302:
      return {rows({{o, o, -P("r"), z, -P("a"), z}, {z, z, o, o, -P("b"), z}, {z, z, z, z, o, o}}), ""};
    case CaseId::C311:
      return {rows({{o, o, z, o, -P("b1") - 1, z}, {z, z, o, -o, o, z}, {z, z, z, z, o, o}}),
              "entry -b-1 read as -b_1-1"};
    case CaseId::C312:
      return {rows({{o, z, o, o, -P("b1") - 1, z}, {z, o, -o, -o, o, z}, {z, z, z, z, o, o}}),
              "entry -b-1 read as -b_1-1"};
    case CaseId::C313:
      return {rows({{o, z, o, -P("b1") - 1, z, -P("c2")}, {z, o, -o, o, z, z}, {z, z, z, o, o, o}}), ""};
    case CaseId::C314:
      return {rows({{o, z, o, -P("b1") - 1, -P("b2") - 1, z}, {z, o, -o, o, o, z}, {z, z, z, o, o, o}}), ""};
    case CaseId::C315:
      return {rows({{o, z, z, o, -P("b1") - 1, z}, {z, o, o, -o, o, z}, {z, z, z, z, o, o}}), ""};
  }
  throw ParameterError("unhandled case");
}

std::vector<IntVec> printed_markov_candidate(const FamilySpec& spec) {
  spec.validate();
  auto P = [&](const char* n) { return spec.param(n); };
  std::vector<IntVec> rows;
  const Int z(0);
  const Int o(1);
  switch (spec.id) {
    case CaseId::C201:
      rows = {{o, z, z}, {-o, z, z}, {z, o, z}, {z, z, o}, {P("l"), -o, -o}};
      break;
    case CaseId::C202:
      rows = {{o, z, z}, {-o, o, z}, {z, -o, z}, {z, z, o}, {P("l1") - P("l2"), P("l2"), -o}};
      break;
    case CaseId::C301:
    case CaseId::C302:
      rows = {{o, z, z}, {-o, P("r"), P("a") + P("b") * P("r")}, {z, o, P("b")}, {z, -o, z}, {z, z, o}, {z, z, -o}};
      break;
    case CaseId::C311:
      rows = {{o, z, z}, {z, o, z}, {-o, -o, P("b1")}, {-o, -o, P("b1") + 1}, {z, z, o}, {z, z, -o}};
      break;
    case CaseId::C312:
      rows = {{o, z, z}, {-o, z, P("b1")}, {-o, -o, P("b1") + 1}, {z, o, z}, {z, z, o}, {z, z, -o}};
      break;
    case CaseId::C313:
      rows = {{o, z, z},
              {-o, P("b1"), P("b1") - P("c2")},
              {-o, P("b1") + 1, P("b1") + 1 - P("c2")},
              {z, o, o},
              {z, -o, z},
              {z, z, -o}};
      break;
    case CaseId::C314:
      rows = {{o, z, z},
              {-o, P("b1"), P("b1") - P("b2")},
              {-o, P("b1") + 1, P("b1") - P("b2")},
              {z, o, o},
              {z, z, -o},
              {z, -o, z}};
      break;
    case CaseId::C315:
      rows = {{o, z, z}, {-o, -o, P("b1")}, {z, o, z}, {-o, z, P("b1") + 1}, {z, z, o}, {z, z, -o}};
      break;
  }
  std::vector<IntVec> moves(3, IntVec(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < 3; ++j) moves[j][i] = rows[i][j];
  return moves;
}

std::vector<ConfigEntry> all_config_entries(CaseId id) {
  const Int z(0);
  const Int o(1);
  switch (id) {
    case CaseId::C201:
      return {{"l=0", "D_2+D_3", {o, o}}, {"l>=1", "D_2", {o, z}}};
    case CaseId::C202:
      return {{"l1=0,l2=0", "D_3+D_4", {o, o}},
              {"l2>=1", "D_4", {z, o}},
              {"l2>=1", "D_3", {o, z}, "proof",
               "the case proof takes E=(a-1)D_3+bD_4, so E'=D_3; the printed D_4 is kept as well"}};
    case CaseId::C301:
      return {{"r=0,a=0,b=0", "D_1+D_4+D_6", {o, o, o}},
              {"b=0,r>=1|b=0,a>=1", "D_4+D_6", {z, o, o}},
              {"b>=1,r=0,a=0", "D_1+D_6", {o, z, o}},
              {"b>=1,r>=1|b>=1,a>=1", "D_6", {z, z, o}}};
    case CaseId::C302:
      return {{"r=0,a=0", "D_1+D_6-bD_4", {o, z, o}}, {"r>=1|a>=1", "D_6-bD_4", {z, z, o}}};
    case CaseId::C311:
    case CaseId::C312:
    case CaseId::C315:
      return {{"b1=0", "D_{u_1}+D_{z_1}", {z, z, o}},
              {"b1=0", "D_{v_1}+D_{z_1}", {o, o, z}},
              {"b1>1", "D_{z_1}", {z, o, z}}};
    case CaseId::C313:
      return {{"b1=0,c2=0", "D_{u_1}+D_{z_1}", {z, z, o}},
              {"b1=0,c2=0", "D_{v_1}+D_{z_1}", {o, o, z}},
              {"else", "D_{z_1}", {z, o, z}}};
    case CaseId::C314:
      return {{"b1=0,b2=0", "D_{u_1}+D_{z_1}", {z, z, o}},
              {"b1=0,b2=0", "D_{v_1}+D_{z_1}", {o, o, z}},
              {"else", "D_{z_1}", {z, o, z}}};
  }
  throw ParameterError("unhandled case");
}

std::vector<ConfigEntry> config_entries(const FamilySpec& spec) {
  spec.validate();
  std::vector<ConfigEntry> out;
  for (const auto& e : all_config_entries(spec.id)) {
    if (e.condition == "else") {
      if (out.empty()) out.push_back(e);
    } else if (condition_holds(e.condition, spec)) {
      out.push_back(e);
    }
  }
  return out;
}

std::string table_parametrization(CaseId id) {
  switch (id) {
    case CaseId::C201:
      return "aD_2+bD_3";
    case CaseId::C202:
      return "aD_3+bD_4";
    case CaseId::C301:
      return "dD_1+eD_4+fD_6";
    case CaseId::C302:
      return "dD_1+(e-bf)D_4+fD_6";
    default:
      return "dD_{v_1}+fD_{u_1}+(e+f)D_{z_1}";
  }
}

}  // namespace torhyp
