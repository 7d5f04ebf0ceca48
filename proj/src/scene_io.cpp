#include "snell/scene_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>

#include "snell/errors.hpp"
#include "snell/output.hpp"

namespace snell {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

struct Entry {
  std::string value;
  int line = 0;
  bool used = false;
};

using Table = std::map<std::string, Entry>;

double number_of(const Entry& entry, const std::string& key) {
  double value = 0.0;
  const char* begin = entry.value.data();
  const char* end = begin + entry.value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw SceneParseError(entry.line,
                          "value of " + key + " is not a number: '" + entry.value + "'");
  }
  return value;
}

double take_number(Table& table, const std::string& key, int profile_line) {
  const auto it = table.find(key);
  if (it == table.end()) {
    throw SceneParseError(profile_line, "profile needs key " + key);
  }
  it->second.used = true;
  return number_of(it->second, key);
}

SpeedProfile build_profile(Table& table, const std::string& prefix) {
  const auto it = table.find(prefix + ".profile");
  if (it == table.end()) {
    throw SceneParseError(0, "missing key " + prefix + ".profile");
  }
  it->second.used = true;
  const Entry& kind = it->second;
  SpeedProfile profile;
  if (kind.value == "isotropic") {
    profile = Isotropic{take_number(table, prefix + ".speed", kind.line)};
  } else if (kind.value == "ellipse") {
    FocusEllipse e;
    e.a = take_number(table, prefix + ".a", kind.line);
    e.eps = take_number(table, prefix + ".eps", kind.line);
    e.phi = take_number(table, prefix + ".phi", kind.line);
    profile = e;
  } else {
    throw SceneParseError(kind.line, prefix + ".profile must be 'isotropic' or 'ellipse', got '" +
                                         kind.value + "'");
  }
  try {
    validate_profile(profile);
    if (!(convexity_margin(profile) > 0.0)) {
      throw InvalidProfile("speed indicatrix is not strongly convex");
    }
  } catch (const InvalidProfile& e) {
    throw SceneParseError(kind.line, prefix + ": " + e.what());
  }
  return profile;
}

}  // namespace

Scene parse_scene_text(const std::string& text) {
  Table table;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw SceneParseError(line_no, "expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw SceneParseError(line_no, "empty key");
    if (value.empty()) throw SceneParseError(line_no, "empty value for key " + key);
    const auto [slot, inserted] = table.try_emplace(key, Entry{value, line_no, false});
    if (!inserted) {
      throw SceneParseError(line_no, "duplicate key " + key + " (first set on line " +
                                         std::to_string(slot->second.line) + ")");
    }
  }
  const SpeedProfile p1 = build_profile(table, "region1");
  const SpeedProfile p2 = build_profile(table, "region2");
  const Entry* stray = nullptr;
  const std::string* stray_key = nullptr;
  for (const auto& [key, entry] : table) {
    if (!entry.used && (stray == nullptr || entry.line < stray->line)) {
      stray = &entry;
      stray_key = &key;
    }
  }
  if (stray != nullptr) {
    throw SceneParseError(stray->line, "unknown key " + *stray_key);
  }
  return Scene(p1, p2);
}

Scene load_scene_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw SceneParseError(0, "cannot open scene file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_scene_text(buffer.str());
}

std::string dump_scene(const Scene& scene) {
  std::string out;
  const auto dump_region = [&out](const std::string& prefix, const SpeedProfile& p) {
    if (const auto* iso = std::get_if<Isotropic>(&p)) {
      out += prefix + ".profile = isotropic\n";
      out += prefix + ".speed = " + format_short(iso->c) + "\n";
    } else {
      const auto& e = std::get<FocusEllipse>(p);
      out += prefix + ".profile = ellipse\n";
      out += prefix + ".a = " + format_short(e.a) + "\n";
      out += prefix + ".eps = " + format_short(e.eps) + "\n";
      out += prefix + ".phi = " + format_short(e.phi) + "\n";
    }
  };
  dump_region("region1", scene.profile1());
  dump_region("region2", scene.profile2());
  return out;
}

}  // namespace snell
