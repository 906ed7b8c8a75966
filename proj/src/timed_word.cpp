#include "tresyn/timed_word.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace tresyn {

bool is_valid_event(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

Rat TimedWord::delay_sum(std::size_t begin, std::size_t end) const {
    Rat sum;
    for (std::size_t i = begin; i < end && i < letters.size(); ++i) sum += letters[i].second;
    return sum;
}

std::vector<Event> untime(const TimedWord& w) {
    std::vector<Event> events;
    events.reserve(w.letters.size());
    for (const auto& [event, delay] : w.letters) events.push_back(event);
    return events;
}

std::vector<Rat> delays(const TimedWord& w) {
    std::vector<Rat> out;
    out.reserve(w.letters.size());
    for (const auto& [event, delay] : w.letters) out.push_back(delay);
    return out;
}

TimedWord parse_timed_word(const std::string& text) {
    TimedWord word;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        const std::size_t at = token.find('@');
        if (at == std::string::npos)
            throw parse_error("timed-word token '" + token + "' is missing '@'");
        const std::string event = token.substr(0, at);
        const std::string delay_text = token.substr(at + 1);
        if (!is_valid_event(event))
            throw parse_error("invalid event name '" + event + "' in token '" + token + "'");
        const Rat delay = Rat::from_decimal(delay_text);
        if (delay.is_negative())
            throw parse_error("negative delay in token '" + token + "'");
        word.letters.emplace_back(event, delay);
    }
    return word;
}

std::string format_timed_word(const TimedWord& w) {
    std::string out;
    for (const auto& [event, delay] : w.letters) {
        if (!out.empty()) out += ' ';
        out += event;
        out += '@';
        out += delay.to_decimal();
    }
    return out;
}

std::vector<TimedWord> read_word_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open word file '" + path + "'");
    std::vector<TimedWord> words;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos && line[first] == '#') continue;
        try {
            words.push_back(parse_timed_word(line));
        } catch (const parse_error& e) {
            throw parse_error(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return words;
}

void write_word_file(const std::string& path, const std::vector<TimedWord>& words) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write word file '" + path + "'");
    for (const TimedWord& w : words) out << format_timed_word(w) << '\n';
}

}  // namespace tresyn
