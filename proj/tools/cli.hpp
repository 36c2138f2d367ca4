#pragma once

// Command-line front end. `run` takes its streams as parameters so the tests
// can drive it in-process.
//
// Exit codes: 0 success, 1 `check` found an invalid identifier, 2 usage or
// parse error. With no positional arguments every subcommand except `coin`
// and `collision` reads one input per line from stdin; a bad line is reported
// on stderr and processing continues.

#include <charconv>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quintid/quintid.hpp"

namespace quintid::cli {

inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;
inline constexpr int kUsage = 2;

/// Decimal or 0x-prefixed unsigned 64-bit integer.
inline std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::string_view s = text;
  int base = 10;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    s.remove_prefix(2);
    base = 16;
  }
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
  if (s.empty() || ec == std::errc::invalid_argument)
    throw parse_error(text, text.size() - s.size(), "not a " + what);
  if (ec == std::errc::result_out_of_range) throw range_error("'" + text + "' does not fit in 64 bits");
  if (end != s.data() + s.size())
    throw parse_error(text, static_cast<std::size_t>(end - text.data()), "not a " + what);
  return v;
}

/// Unsigned (decimal or 0x) value, or a negative decimal mapped to its
/// two's-complement pattern at `width`.
inline std::uint64_t parse_value(const std::string& text, Width width) {
  if (!text.empty() && text[0] == '-') {
    std::int64_t v = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec == std::errc::invalid_argument || text.size() == 1)
      throw parse_error(text, 1, "not an integer");
    if (end != text.data() + text.size())
      throw parse_error(text, static_cast<std::size_t>(end - text.data()), "not an integer");
    const std::int64_t min = width == Width::w64 ? INT64_MIN : -(std::int64_t{1} << (bits(width) - 1));
    if (ec == std::errc::result_out_of_range || v < min)
      throw range_error("value " + text + " does not fit in a signed " + std::to_string(bits(width)) + "-bit integer");
    return static_cast<std::uint64_t>(v) & max_value(width);
  }
  const auto v = parse_u64(text, "decimal or 0x-prefixed integer");
  if (v > max_value(width))
    throw range_error("value " + text + " does not fit in " + std::to_string(bits(width)) + " bits");
  return v;
}

namespace detail {

struct Batch {
  std::ostream& out;
  std::ostream& err;
  int status = kOk;

  void fail(const std::string& msg) {
    err << "quintid: " << msg << '\n';
    status = kUsage;
  }

  // Runs `fn` on each input; errors are reported per input and do not stop
  // the batch.
  void each(const std::vector<std::string>& args, std::istream& in,
            const std::function<void(const std::string&)>& fn) {
    auto one = [&](const std::string& item) {
      try {
        fn(item);
      } catch (const quintid::error& e) {
        fail(e.what());
      }
    };
    if (!args.empty()) {
      for (const auto& a : args) one(a);
      return;
    }
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) {
        fail("empty input line");
        continue;
      }
      one(line);
    }
  }

  void invalid() {
    if (status == kOk) status = kInvalid;
  }
};

inline PrefixRegistry make_registry(const std::string& registry_path, const std::string& base,
                                    const std::string& prefix) {
  if (!registry_path.empty()) return PrefixRegistry::load(registry_path);
  return PrefixRegistry({PrefixEntry{prefix, base, '_'}});
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pronounceable, checkable, coordination-free identifiers", "quintid"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "quintid 1.0.0");

  unsigned width_bits = 32;
  auto add_width = [&](CLI::App* sub) {
    return sub->add_option("-w,--width", width_bits, "Identifier width in bits")
        ->check(CLI::IsMember({16u, 32u, 64u}))
        ->capture_default_str();
  };
  std::vector<std::string> inputs;

  auto* encode_cmd = app.add_subcommand("encode", "Encode integers as proquints");
  add_width(encode_cmd);
  bool checked = false;
  encode_cmd->add_flag("-c,--checked", checked, "Append a check letter");
  encode_cmd->add_option("values", inputs, "Decimal, 0x-hex or negative (two's complement) values");

  auto* decode_cmd = app.add_subcommand("decode", "Decode canonical proquints to integers");
  add_width(decode_cmd);
  bool as_signed = false;
  decode_cmd->add_flag("-s,--signed", as_signed, "Print the two's-complement signed value");
  decode_cmd->add_option("proquints", inputs, "Canonical proquints");

  auto* canon_cmd = app.add_subcommand("canon", "Canonicalize case and separators of proquints");
  add_width(canon_cmd);
  canon_cmd->add_option("proquints", inputs, "Proquints in any case, hyphens optional");

  auto* coin_cmd = app.add_subcommand("coin", "Coin random identifiers");
  add_width(coin_cmd);
  std::uint64_t count = 1;
  std::string seed_text;
  coin_cmd->add_option("-n,--count", count, "Number of identifiers")->capture_default_str();
  coin_cmd->add_option("--seed", seed_text, "Deterministic seed, decimal or 0x-prefixed 64-bit");
  coin_cmd->add_flag("-c,--checked", checked, "Append a check letter");

  auto* check_cmd = app.add_subcommand("check", "Validate checked decimal IDs or checked proquints");
  unsigned check_width = 0;
  check_cmd->add_option("-w,--width", check_width, "Proquint width (inferred from group count if omitted)")
      ->check(CLI::IsMember({16u, 32u, 64u}));
  check_cmd->add_option("ids", inputs, "Checked identifiers");

  auto* attach_cmd = app.add_subcommand("attach-check", "Append a Damm check digit");
  add_width(attach_cmd);
  attach_cmd->add_option("ids", inputs, "Decimal digit strings or canonical proquints");

  auto* collision_cmd = app.add_subcommand("collision", "Birthday-problem collision risk");
  unsigned space_bits = 0;
  std::uint64_t cardinality = 0;
  std::uint64_t draws = 0;
  double max_risk = 0.0;
  auto* bits_opt = collision_cmd->add_option("--space-bits", space_bits, "Space of 2^BITS identifiers")
                       ->check(CLI::Range(0u, 64u));
  auto* card_opt = collision_cmd->add_option("--cardinality", cardinality, "Space of N identifiers")
                       ->check(CLI::PositiveNumber);
  bits_opt->excludes(card_opt);
  auto* draws_opt = collision_cmd->add_option("--draws", draws, "Print the collision probability of N draws");
  auto* risk_opt = collision_cmd->add_option("--max-risk", max_risk, "Print the largest safe number of draws")
                       ->check(CLI::Range(0.0, 1.0));
  draws_opt->excludes(risk_opt);

  std::string registry_path;
  std::string base;
  std::string prefix;
  auto add_registry = [&](CLI::App* sub) {
    auto* reg = sub->add_option("--registry", registry_path, "PREFIX<TAB>BASE_URI registry file");
    auto* b = sub->add_option("--base", base, "Base URI (single-prefix registry with --prefix)");
    reg->excludes(b);
    sub->add_option("--prefix", prefix, "Ontology prefix, e.g. GO");
  };

  auto* iri_format_cmd = app.add_subcommand("iri-format", "Build term IRIs from local identifiers");
  add_registry(iri_format_cmd);
  iri_format_cmd->add_option("locals", inputs, "Local identifiers");

  auto* iri_parse_cmd = app.add_subcommand("iri-parse", "Split term IRIs into prefix, local and kind");
  add_registry(iri_parse_cmd);
  iri_parse_cmd->add_option("iris", inputs, "Full IRIs");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  detail::Batch batch{out, err};
  const Width width = width_from_bits(width_bits);

  try {
    if (*encode_cmd) {
      batch.each(inputs, in, [&](const std::string& s) {
        const auto p = encode(parse_value(s, width), width);
        out << (checked ? attach_check(p).text : p.text()) << '\n';
      });
    } else if (*decode_cmd) {
      batch.each(inputs, in, [&](const std::string& s) {
        const auto v = decode(s, width);
        if (as_signed) {
          const unsigned b = bits(width);
          const bool negative = b < 64 ? (v >> (b - 1)) & 1 : (v >> 63) & 1;
          if (negative && b < 64)
            out << static_cast<std::int64_t>(v) - (std::int64_t{1} << b) << '\n';
          else
            out << static_cast<std::int64_t>(v) << '\n';
        } else {
          out << v << '\n';
        }
      });
    } else if (*canon_cmd) {
      batch.each(inputs, in, [&](const std::string& s) { out << canonicalize(s, width).text() << '\n'; });
    } else if (*coin_cmd) {
      const IdSpace space{width, checked};
      if (space.is_short())
        err << "quintid: warning: random 16-bit identifiers are very likely to collide; "
               "use --width 32 or 64 for coinage\n";
      auto source = seed_text.empty() ? RandomSource::entropy()
                                      : RandomSource::seeded(parse_u64(seed_text, "64-bit seed"));
      for (const auto& p : coin_batch(space, source, count))
        out << (checked ? attach_check(p).text : p.text()) << '\n';
    } else if (*check_cmd) {
      batch.each(inputs, in, [&](const std::string& s) {
        bool ok = false;
        const bool digits = !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
        if (digits) {
          ok = validate_number(s);
        } else if (check_width != 0) {
          ok = verify_checked(s, width_from_bits(check_width));
        } else {
          const auto cls = classify_local(s);
          if (cls.kind == LocalKind::proquint)
            throw parse_error(s, s.size(), "missing check group (this is a plain proquint)");
          std::optional<Width> w = cls.width;
          if (!w) {
            const auto groups = static_cast<std::size_t>(std::count(s.begin(), s.end(), '-'));
            w = width_from_groups(groups);
          }
          if (!w)
            throw parse_error(s, 0, "neither a checked decimal ID nor a checked proquint of 1, 2 or 4 groups");
          ok = verify_checked(s, *w);
        }
        out << (ok ? "valid" : "invalid") << '\n';
        if (!ok) batch.invalid();
      });
    } else if (*attach_cmd) {
      batch.each(inputs, in, [&](const std::string& s) {
        const bool digits = !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
        out << (digits ? attach_check_number(s).text : attach_check(parse(s, width)).text) << '\n';
      });
    } else if (*collision_cmd) {
      if (bits_opt->count() + card_opt->count() != 1)
        throw domain_error("collision needs exactly one of --space-bits or --cardinality");
      if (draws_opt->count() + risk_opt->count() != 1)
        throw domain_error("collision needs exactly one of --draws or --max-risk");
      const Cardinality space =
          bits_opt->count() ? Cardinality::power_of_two(space_bits) : Cardinality(cardinality);
      if (draws_opt->count())
        out << std::setprecision(10) << collision_probability(draws, space) << '\n';
      else
        out << draws_for_risk(max_risk, space) << '\n';
    } else if (*iri_format_cmd || *iri_parse_cmd) {
      if (registry_path.empty() && (base.empty() || prefix.empty()))
        throw domain_error("give --registry FILE, or --base URI together with --prefix");
      const auto registry = detail::make_registry(registry_path, base, prefix);
      if (*iri_format_cmd) {
        if (prefix.empty()) throw domain_error("iri-format needs --prefix");
        batch.each(inputs, in, [&](const std::string& s) { out << format_iri(registry, prefix, s).full << '\n'; });
      } else {
        batch.each(inputs, in, [&](const std::string& s) {
          const auto parts = parse_iri(registry, s);
          out << parts.prefix << '\t' << parts.local << '\t' << to_string(parts.kind()) << '\n';
        });
      }
    }
  } catch (const quintid::error& e) {
    batch.fail(e.what());
  }
  return batch.status;
}

}  // namespace quintid::cli
