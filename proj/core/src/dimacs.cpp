#include "s5/dimacs.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

namespace s5 {

DimacsError::DimacsError(const std::string& message, std::size_t line)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

void write_dimacs(std::ostream& out, const CnfInstance& instance) {
  const VarMap& vars = instance.varmap();
  if (instance.source() != nullptr) {
    for (std::size_t v = 1; v <= vars.size(); ++v) {
      out << "c " << v << ' ' << vars.name(static_cast<int>(v)) << '\n';
    }
  }
  out << "p cnf " << instance.num_vars() << ' ' << instance.num_clauses() << '\n';
  for (const auto& clause : instance.clauses()) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
}

std::string emit_dimacs(const CnfInstance& instance) {
  std::ostringstream out;
  write_dimacs(out, instance);
  return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

long long to_number(std::string_view token, std::size_t line) {
  long long value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw DimacsError("expected an integer, found '" + std::string(token) + "'", line);
  }
  return value;
}

}  // namespace

CnfInstance parse_dimacs(std::string_view text) {
  bool header_seen = false;
  long long declared_vars = 0;
  long long declared_clauses = 0;
  std::vector<Clause> clauses;
  Clause current;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == 'c' || line.front() == '%') continue;

    std::istringstream tokens{std::string(line)};
    if (line.front() == 'p') {
      if (header_seen) throw DimacsError("duplicate header", line_no);
      std::string p;
      std::string format;
      std::string vars;
      std::string count;
      std::string extra;
      tokens >> p >> format >> vars >> count;
      if (p != "p" || format != "cnf" || count.empty() || (tokens >> extra)) {
        throw DimacsError("malformed header", line_no);
      }
      declared_vars = to_number(vars, line_no);
      declared_clauses = to_number(count, line_no);
      if (declared_vars < 0 || declared_clauses < 0) {
        throw DimacsError("negative count in header", line_no);
      }
      header_seen = true;
      continue;
    }

    if (!header_seen) throw DimacsError("clause before header", line_no);
    std::string token;
    while (tokens >> token) {
      const long long lit = to_number(token, line_no);
      if (lit == 0) {
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (lit > declared_vars || -lit > declared_vars) {
        throw DimacsError("literal " + token + " exceeds the declared variable count", line_no);
      }
      current.push_back(static_cast<int>(lit));
    }
  }
  if (!current.empty()) clauses.push_back(std::move(current));
  if (!header_seen) throw DimacsError("missing header", line_no);
  if (static_cast<long long>(clauses.size()) != declared_clauses) {
    throw DimacsError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                          std::to_string(clauses.size()),
                      line_no);
  }
  return CnfInstance::from_clauses(static_cast<std::size_t>(declared_vars), std::move(clauses));
}

}  // namespace s5
