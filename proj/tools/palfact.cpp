#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>

#include "palfact/eopl.hpp"
#include "palfact/factorizer.hpp"
#include "palfact/nlogn.hpp"
#include "palfact/oracle.hpp"

using namespace palfact;
using json = nlohmann::json;

namespace {

enum class Engine { Naive, Nlogn, Linear };
enum class Format { Text, Json, Ndjson };

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quadratic per letter; only for cross-checking.
class NaiveEngine {
 public:
  PlPair push(Letter a) {
    s_.push_back(a);
    const auto i = static_cast<std::int64_t>(s_.size()) - 1;
    PlPair best{kInf, kInf};
    for (std::int64_t q = 0; q <= i; ++q) {
      if (!oracle::is_pal(s_, q, i)) continue;
      const PlPair prev = q == 0 ? kEmptyPl : pl_[static_cast<std::size_t>(q - 1)];
      best = min(best, prev.plus_one_swapped());
    }
    pl_.push_back(best);
    return best;
  }
  const std::vector<PlPair>& pl() const { return pl_; }

 private:
  Text s_;
  std::vector<PlPair> pl_;
};

class AnyEngine {
 public:
  AnyEngine(Engine e, int t) : kind_(e), linear_(EoplConfig{t}) {}
  PlPair push(Letter a) {
    switch (kind_) {
      case Engine::Naive: return naive_.push(a);
      case Engine::Nlogn: return nlogn_.push(a);
      default: return linear_.push(a);
    }
  }
  const std::vector<PlPair>& pl() const {
    switch (kind_) {
      case Engine::Naive: return naive_.pl();
      case Engine::Nlogn: return nlogn_.pl();
      default: return linear_.pl();
    }
  }

 private:
  Engine kind_;
  NaiveEngine naive_;
  NlognEngine nlogn_;
  EoplEngine linear_;
};

std::string ext_text(ExtLen v) { return v.is_inf() ? "inf" : std::to_string(v.value()); }
json ext_json(ExtLen v) { return v.is_inf() ? json(nullptr) : json(v.value()); }

// Returns false on malformed input.
bool decode_utf8(const std::string& in, Text& out) {
  for (std::size_t i = 0; i < in.size();) {
    const auto b = static_cast<unsigned char>(in[i]);
    int extra = b < 0x80 ? 0 : (b >> 5) == 6 ? 1 : (b >> 4) == 14 ? 2 : (b >> 3) == 30 ? 3 : -1;
    if (extra < 0 || i + extra >= in.size() + (extra == 0)) return false;
    Letter cp = extra == 0 ? b : b & (0x3F >> extra);
    for (int k = 1; k <= extra; ++k) {
      const auto c = static_cast<unsigned char>(in[i + k]);
      if ((c >> 6) != 2) return false;
      cp = (cp << 6) | (c & 0x3F);
    }
    out.push_back(cp);
    i += static_cast<std::size_t>(extra) + 1;
  }
  return true;
}

void encode_utf8(Letter cp, std::string& out) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

std::string render(const Text& w, bool utf8) {
  std::string out;
  for (Letter a : w) {
    if (utf8) encode_utf8(a, out);
    else out += static_cast<char>(a);
  }
  return out;
}

struct Options {
  Engine engine = Engine::Linear;
  Format format = Format::Text;
  std::int64_t k = 0;
  int chunk_width = 8;
  std::uint64_t seed = 1;
  std::string input;
  bool online = false;
  bool utf8 = false;
  int random = 0;
  int max_exp = 20;
};

Text read_input(const Options& o) {
  std::string raw;
  if (o.input.empty() || o.input == "-") {
    raw.assign(std::istreambuf_iterator<char>(std::cin), {});
    if (std::cin.bad()) throw std::runtime_error("cannot read stdin");
  } else {
    std::ifstream f(o.input, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + o.input);
    raw.assign(std::istreambuf_iterator<char>(f), {});
  }
  // One trailing newline belongs to the shell, not the text.
  if (!raw.empty() && raw.back() == '\n') raw.pop_back();
  if (!raw.empty() && raw.back() == '\r') raw.pop_back();
  Text s;
  if (o.utf8) {
    if (!decode_utf8(raw, s)) throw std::runtime_error("malformed UTF-8 input");
  } else {
    for (char c : raw) s.push_back(static_cast<unsigned char>(c));
  }
  return s;
}

void emit_length(const Options& o, std::int64_t i, PlPair v, json* all) {
  if (o.format == Format::Text) {
    std::cout << i << ' ' << ext_text(v.even) << ' ' << ext_text(v.odd) << '\n';
    return;
  }
  json rec{{"i", i}, {"pl0", ext_json(v.even)}, {"pl1", ext_json(v.odd)}};
  if (o.format == Format::Ndjson) std::cout << rec.dump() << '\n';
  else all->push_back(std::move(rec));
}

int run_length(const Options& o) {
  AnyEngine eng(o.engine, o.chunk_width);
  json all = json::array();
  if (o.online) {
    // Letters are consumed one byte at a time; a newline ends the input.
    std::FILE* in = o.input.empty() || o.input == "-" ? stdin : std::fopen(o.input.c_str(), "rb");
    if (!in) throw std::runtime_error("cannot open " + o.input);
    std::int64_t i = 0;
    for (int c; (c = std::fgetc(in)) != EOF && c != '\n'; ++i) {
      emit_length(o, i, eng.push(static_cast<Letter>(c)), &all);
      std::cout.flush();
    }
    if (in != stdin) std::fclose(in);
  } else {
    const Text s = read_input(o);
    for (std::size_t i = 0; i < s.size(); ++i) emit_length(o, static_cast<std::int64_t>(i), eng.push(s[i]), &all);
  }
  if (o.format == Format::Json) std::cout << all.dump() << '\n';
  return 0;
}

std::optional<Factorization> factorize(const Options& o, const Text& s) {
  if (o.k < 1) throw Usage("-k must be at least 1");
  if (o.engine == Engine::Linear) return k_factorization(s, o.k, o.chunk_width);
  if (s.empty() || o.k > static_cast<std::int64_t>(s.size())) return std::nullopt;
  NlognEngine eng;
  for (Letter a : s) eng.push(a);
  std::vector<PlPair> pl = eng.pl();
  if (o.engine == Engine::Naive) pl = oracle::pl_pairs_naive(s);
  const int parity = static_cast<int>(o.k % 2);
  const ExtLen kp = pl.back()[parity];
  if (kp.is_inf() || kp.value() > o.k) return std::nullopt;
  auto f = min_parity_factorization(pl, eng.iterator(), parity);
  if (!f) return std::nullopt;
  return expand_to_k(*f, o.k);
}

int run_check(const Options& o) {
  const bool yes = factorize(o, read_input(o)).has_value();
  if (o.format == Format::Text) std::cout << (yes ? "yes" : "no") << '\n';
  else std::cout << json{{"k", o.k}, {"factorizable", yes}}.dump() << '\n';
  return yes ? 0 : 1;
}

int run_factorize(const Options& o) {
  const Text s = read_input(o);
  const auto f = factorize(o, s);
  if (!f) {
    if (o.format == Format::Text) std::cout << "no factorization\n";
    else std::cout << "null\n";
    return 1;
  }
  const auto parts = factors_of(s, *f);
  if (o.format == Format::Text) {
    for (std::size_t i = 0; i < parts.size(); ++i) std::cout << (i ? "|" : "") << render(parts[i], o.utf8);
    std::cout << '\n';
  } else {
    json arr = json::array();
    for (const Text& w : parts) arr.push_back(render(w, o.utf8));
    std::cout << arr.dump() << '\n';
  }
  return 0;
}

std::vector<std::vector<PlPair>> all_engines(const Text& s, int t) {
  std::vector<std::vector<PlPair>> out;
  for (Engine e : {Engine::Naive, Engine::Nlogn, Engine::Linear}) {
    AnyEngine eng(e, t);
    for (Letter a : s) eng.push(a);
    out.push_back(eng.pl());
  }
  return out;
}

bool disagree(const Text& s, int t) {
  const auto r = all_engines(s, t);
  return r[0] != r[1] || r[0] != r[2];
}

// Shortest failing prefix, then greedy single-letter deletions.
Text shrink(Text s, int t) {
  while (s.size() > 1) {
    Text shorter(s.begin(), s.end() - 1);
    if (!disagree(shorter, t)) break;
    s = std::move(shorter);
  }
  for (std::size_t i = 0; i < s.size();) {
    Text cut = s;
    cut.erase(cut.begin() + static_cast<std::ptrdiff_t>(i));
    if (!cut.empty() && disagree(cut, t)) s = std::move(cut);
    else ++i;
  }
  return s;
}

int report(const Options& o, const Text& s) {
  const Text small = shrink(s, o.chunk_width);
  const auto r = all_engines(small, o.chunk_width);
  std::cout << "disagreement; reproducer: " << render(small, o.utf8) << '\n';
  const char* names[] = {"naive", "nlogn", "linear"};
  for (std::size_t i = 0; i < small.size(); ++i) {
    std::cout << i;
    for (std::size_t e = 0; e < 3; ++e)
      std::cout << ' ' << names[e] << '=' << ext_text(r[e][i].even) << ',' << ext_text(r[e][i].odd);
    std::cout << '\n';
  }
  return 1;
}

int run_diff(const Options& o) {
  if (o.random > 0) {
    std::mt19937_64 rng(o.seed);
    for (int rep = 0; rep < o.random; ++rep) {
      Text s(1 + rng() % 64);
      for (Letter& a : s) a = 'a' + static_cast<Letter>(rng() % (2 + rep % 3));
      if (disagree(s, o.chunk_width)) return report(o, s);
    }
    std::cout << "ok " << o.random << " strings\n";
    return 0;
  }
  const Text s = read_input(o);
  if (disagree(s, o.chunk_width)) return report(o, s);
  std::cout << "ok\n";
  return 0;
}

Text generate(const std::string& family, std::size_t n, std::mt19937_64& rng) {
  Text s(n);
  if (family == "random") {
    for (Letter& a : s) a = 'a' + static_cast<Letter>(rng() % 2);
  } else if (family == "periodic") {
    for (std::size_t i = 0; i < n; ++i) s[i] = i % 2 ? 'b' : 'a';
  } else {
    // Fibonacci word: many series at every prefix.
    std::string a = "a", b = "ab";
    while (b.size() < n) {
      std::string c = b + a;
      a = std::move(b);
      b = std::move(c);
    }
    for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<unsigned char>(b[i]);
  }
  return s;
}

int run_bench(const Options& o) {
  std::mt19937_64 rng(o.seed);
  std::cout << "family,n,engine,ns\n";
  for (const char* family : {"random", "periodic", "high-series"}) {
    for (int e = 10; e <= o.max_exp; ++e) {
      const std::size_t n = std::size_t{1} << e;
      const Text s = generate(family, n, rng);
      for (Engine eng : {Engine::Naive, Engine::Nlogn, Engine::Linear}) {
        if (eng == Engine::Naive && e > 11) continue;
        AnyEngine run(eng, o.chunk_width);
        const auto t0 = std::chrono::steady_clock::now();
        for (Letter a : s) run.push(a);
        const auto ns =
            std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0).count();
        const char* name = eng == Engine::Naive ? "naive" : eng == Engine::Nlogn ? "nlogn" : "linear";
        std::cout << family << ',' << n << ',' << name << ',' << ns << '\n';
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum palindromic factorizations"};
  app.require_subcommand(1);
  Options o;
  const std::map<std::string, Engine> engines{
      {"naive", Engine::Naive}, {"nlogn", Engine::Nlogn}, {"linear", Engine::Linear}};
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"ndjson", Format::Ndjson}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "input file, - for stdin");
    sub->add_option("-e,--engine", o.engine, "naive, nlogn or linear")->transform(CLI::CheckedTransformer(engines));
    sub->add_option("-f,--format", o.format, "text, json or ndjson")->transform(CLI::CheckedTransformer(formats));
    sub->add_option("-t,--chunk-width", o.chunk_width, "chunk width of the linear engine")->check(CLI::Range(2, 16));
    sub->add_flag("--utf8", o.utf8, "read code points instead of bytes");
  };
  auto* length = app.add_subcommand("length", "pl0 and pl1 of every prefix");
  common(length);
  length->add_flag("--online", o.online, "emit each record before reading the next byte");
  auto* check = app.add_subcommand("check", "is there a palindromic k-factorization");
  common(check);
  check->add_option("-k", o.k, "number of factors")->required();
  auto* fact = app.add_subcommand("factorize", "print a palindromic k-factorization");
  common(fact);
  fact->add_option("-k", o.k, "number of factors")->required();
  auto* diff = app.add_subcommand("diff", "compare all engines");
  common(diff);
  diff->add_option("--random", o.random, "check this many random strings instead of the input");
  diff->add_option("--seed", o.seed, "generator seed");
  auto* bench = app.add_subcommand("bench", "time the engines, CSV on stdout");
  bench->add_option("-t,--chunk-width", o.chunk_width, "chunk width of the linear engine")->check(CLI::Range(2, 16));
  bench->add_option("--seed", o.seed, "generator seed");
  bench->add_option("--max-exp", o.max_exp, "largest size is 2^max-exp")->check(CLI::Range(10, 26));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (o.online && o.format == Format::Json) throw Usage("--online needs text or ndjson output");
    if (*length) return run_length(o);
    if (*check) return run_check(o);
    if (*fact) return run_factorize(o);
    if (*diff) return run_diff(o);
    return run_bench(o);
  } catch (const std::exception& e) {
    std::cerr << "palfact: " << e.what() << '\n';
    return 2;
  }
}
