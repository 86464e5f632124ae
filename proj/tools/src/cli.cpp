#include "pga/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "pga/errors.hpp"
#include "pga/oracle.hpp"
#include "pga/parser.hpp"
#include "pga/semantics.hpp"

namespace pga::cli {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string approx(const Rational& r) {
  std::ostringstream os;
  os << std::setprecision(6) << r.to_double();
  return os.str();
}

std::string canonical_query_text(const Valuation& v) { return v.to_string(); }

}  // namespace

Valuation parse_point_query(std::string_view text) {
  std::string_view body = strip(text);
  if (body.size() < 4 || (body[0] != 'P' && body[0] != 'p'))
    throw std::invalid_argument("point query must look like P(X=1, Y=2): '" +
                                std::string(text) + "'");
  body.remove_prefix(1);
  body = strip(body);
  if (body.empty() || body.front() != '(' || body.back() != ')')
    throw std::invalid_argument("point query must look like P(X=1, Y=2): '" +
                                std::string(text) + "'");
  body.remove_prefix(1);
  body.remove_suffix(1);

  Valuation v;
  std::size_t start = 0;
  std::string inner(body);
  while (start <= inner.size()) {
    std::size_t comma = inner.find(',', start);
    std::string part = comma == std::string::npos ? inner.substr(start)
                                                  : inner.substr(start, comma - start);
    std::string_view item = strip(part);
    if (item.empty())
      throw std::invalid_argument("empty clause in point query: '" + std::string(text) + "'");
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("point query clause needs 'var=value': '" +
                                  std::string(item) + "'");
    std::string_view name = strip(item.substr(0, eq));
    std::string_view value = strip(item.substr(eq + 1));
    if (name.empty() || value.empty())
      throw std::invalid_argument("point query clause needs 'var=value': '" +
                                  std::string(item) + "'");
    for (char c : value)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("point query value must be a natural number: '" +
                                    std::string(item) + "'");
    VarId var((std::string(name)));
    if (v.contains(var))
      throw std::invalid_argument("variable repeated in point query: " + std::string(name));
    v.set(var, std::stoull(std::string(value)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (v.entries().empty())
    throw std::invalid_argument("point query must constrain at least one variable");
  return v;
}

namespace {

struct Outputs {
  RunReport report;
  std::ostringstream human;
  std::ostringstream csv;
};

void run_queries(const CliRequest& req, const Pga& automaton, Outputs& out) {
  for (const PointQuery& q : req.point_queries) {
    Rational value = coefficient(automaton, q.target);
    QueryResult result;
    result.kind = "point";
    result.target = q.text.empty() ? canonical_query_text(q.target) : q.text;
    result.value = value;
    result.residual = 0;
    out.human << "P(" << canonical_query_text(q.target) << ") = " << value.to_string()
              << " (~" << approx(value) << ")\n";
    out.report.queries.push_back(std::move(result));
  }

  for (const MarginalQuery& q : req.marginals) {
    DistTable table = marginal_table(automaton, std::vector<VarId>{q.var}, q.max_degree);
    QueryResult result;
    result.kind = "marginal";
    result.target = q.var.name();
    result.residual = table.residual;
    out.human << "marginal of " << q.var.name() << " (degree <= " << q.max_degree << "):\n";
    if (req.csv) out.csv << "valuation,probability\n";
    for (std::uint64_t d = 0; d <= q.max_degree; ++d) {
      Valuation key;
      key.set(q.var, d);
      auto it = table.entries.find(key);
      Rational prob = it == table.entries.end() ? Rational(0) : it->second;
      result.table.emplace_back(std::to_string(d), prob);
      out.human << "  " << q.var.name() << "=" << d << "  " << prob.to_string() << " (~"
                << approx(prob) << ")\n";
      if (req.csv) out.csv << q.var.name() << "=" << d << "," << prob.to_string() << "\n";
    }
    out.human << "  residual = " << table.residual.to_string() << "\n";
    if (req.csv) out.csv << "\n";
    out.report.queries.push_back(std::move(result));
  }

  for (VarId var : req.expectations) {
    Rational value = expectation(automaton, var);
    QueryResult result;
    result.kind = "expectation";
    result.target = var.name();
    result.value = value;
    result.residual = 0;
    out.human << "E[" << var.name() << "] = " << value.to_string() << " (~" << approx(value)
              << ")\n";
    out.report.queries.push_back(std::move(result));
  }
}

int run_oracle_check(const CliRequest& req, const Program& program, const Pga& raw,
                     std::ostream& err) {
  oracle::EnumerationResult reference = oracle::enumerate_full(program, req.epsilon);

  // Tabulate the automaton side at least as far as the oracle reached.
  std::map<VarId, std::uint64_t> max_degree;
  for (VarId v : free_vars(program)) max_degree[v] = 0;
  for (const auto& [valuation, prob] : reference.table.entries)
    for (const auto& [var, n] : valuation.entries())
      if (max_degree[var] < n) max_degree[var] = n;

  std::vector<std::pair<VarId, std::uint64_t>> bounds(max_degree.begin(), max_degree.end());
  DistTable pga_side = marginal_table(raw, bounds);

  oracle::ComparisonReport report = oracle::compare(pga_side, reference.table, Rational(0));
  if (report.ok()) {
    err << "oracle check: ok (" << reference.table.entries.size()
        << " valuations, residual = " << reference.table.residual.to_string() << ")\n";
    return kExitSuccess;
  }
  err << "oracle check: " << report.violations.size() << " violation(s)\n";
  for (const auto& violation : report.violations)
    err << "  at " << violation.valuation.to_string() << ": engine "
        << violation.pga_value.to_string() << " vs oracle "
        << violation.oracle_value.to_string() << " (allowed slack "
        << reference.table.residual.to_string() << ")\n";
  return kExitOracleMismatch;
}

}  // namespace

int run(const CliRequest& req, std::ostream& out, std::ostream& err) {
  if (req.json && req.csv) {
    err << "error: --json and --csv are mutually exclusive\n";
    return kExitUserError;
  }

  std::ifstream file(req.input_path);
  if (!file) {
    err << "error: cannot read '" << req.input_path << "'\n";
    return kExitUserError;
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();

  try {
    Program program = parse(buffer.str());

    TransformerConfig cfg;
    cfg.minimize = req.minimize;
    Pga raw = infer(program, cfg);
    Rational evidence = total_mass(raw);

    Pga automaton = [&]() {
      if (req.unnormalized) return raw;
      if (evidence.is_zero())
        throw ZeroMassError("all probability mass was rejected by observations");
      return scale_initial(raw, Rational(1) / evidence);
    }();

    Outputs outputs;
    outputs.report.program_path = req.input_path;
    outputs.report.normalized = !req.unnormalized;
    outputs.report.mass = req.unnormalized ? evidence : Rational(1);
    outputs.human << "evidence = " << evidence.to_string() << " (~" << approx(evidence)
                  << ")\n";

    run_queries(req, automaton, outputs);

    int exit_code = kExitSuccess;
    if (req.oracle_check) exit_code = run_oracle_check(req, program, raw, err);

    if (req.dot_path) {
      std::ofstream dot(*req.dot_path);
      if (!dot) {
        err << "error: cannot write '" << *req.dot_path << "'\n";
        return kExitUserError;
      }
      dot << dot_export(automaton);
      err << "dot graph written to " << *req.dot_path << "\n";
    }

    if (req.json)
      out << json_report(outputs.report);
    else if (req.csv)
      out << outputs.csv.str();
    else
      out << outputs.human.str();
    return exit_code;
  } catch (const SyntaxError& e) {
    err << "error: " << req.input_path << ":" << e.what() << "\n";
    return kExitUserError;
  } catch (const SemanticError& e) {
    err << "error: " << req.input_path << ":" << e.what() << "\n";
    return kExitUserError;
  } catch (const ZeroMassError& e) {
    err << "error: " << e.what() << "\n";
    return kExitZeroMass;
  } catch (const DivergentAutomatonError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDivergent;
  } catch (const std::invalid_argument& e) {
    // Bad request parameters surfacing from the engine (nonpositive epsilon,
    // duplicate marginal variables, ...).
    err << "error: " << e.what() << "\n";
    return kExitUserError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUserError;
  }
}

}  // namespace pga::cli
