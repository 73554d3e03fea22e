#include "discourse/labels.hpp"

#include <vector>

namespace discourse {

SentClass parse_sent_class(const std::string& s) {
    if (s == "negative") return SentClass::negative;
    if (s == "neutral") return SentClass::neutral;
    if (s == "positive") return SentClass::positive;
    throw ValidationError("unknown sentiment class: '" + s + "'");
}

AuthorRole parse_author_role(const std::string& s) {
    if (s == "student") return AuthorRole::student;
    if (s == "teacher") return AuthorRole::teacher;
    if (s == "parent") return AuthorRole::parent;
    if (s == "other") return AuthorRole::other;
    throw ValidationError("unknown author role: '" + s + "'");
}

Task parse_task(const std::string& s) {
    if (s == "sentiment") return Task::sentiment;
    if (s == "author") return Task::author;
    throw ValidationError("unknown task: '" + s + "' (expected sentiment|author)");
}

const std::vector<std::string>& task_labels(Task t) {
    static const std::vector<std::string> sentiment = {"negative", "neutral", "positive"};
    static const std::vector<std::string> author = {"student", "teacher", "parent", "other"};
    return t == Task::sentiment ? sentiment : author;
}

} // namespace discourse
