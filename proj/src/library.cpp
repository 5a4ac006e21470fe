#include "qcalc/library.hpp"

#include <filesystem>
#include <map>
#include <mutex>

#include "qcalc/loader.hpp"

namespace qcalc {

namespace detail {
const std::map<std::string, std::string> &embedded_files();
}

namespace {

std::string strip(const std::string &name)
{
	auto dot = name.rfind('.');
	if (dot != std::string::npos && name.substr(dot) == ".alg")
		return name.substr(0, dot);
	return name;
}

} // namespace

std::vector<std::string> builtin_names()
{
	std::vector<std::string> out;
	for (auto &[file, text] : detail::embedded_files())
		if (file.ends_with(".alg"))
			out.push_back(strip(file));
	return out;
}

const std::string &builtin_source(const std::string &name)
{
	auto &files = detail::embedded_files();
	auto it = files.find(strip(name) + ".alg");
	if (it == files.end())
		it = files.find(name);
	if (it == files.end())
		throw std::out_of_range("no shipped file named " + name);
	return it->second;
}

PresentationPtr builtin(const std::string &name)
{
	// recursive for extends:, so a recursive mutex
	static std::recursive_mutex lock;
	static std::map<std::string, PresentationPtr> cache;
	std::lock_guard guard(lock);
	std::string file = strip(name);
	std::string key = file + "|" + specialization_key();
	if (auto it = cache.find(key); it != cache.end())
		return it->second;
	auto p = load_presentation(builtin_source(file), file + ".alg", [](const std::string &base) { return builtin(base); });
	cache[key] = p;
	return p;
}

PresentationPtr cached_presentation(const std::string &key, const std::function<PresentationPtr()> &make)
{
	static std::mutex lock;
	static std::map<std::string, PresentationPtr> cache;
	std::string full = key + "|" + specialization_key();
	{
		std::lock_guard guard(lock);
		if (auto it = cache.find(full); it != cache.end())
			return it->second;
	}
	auto p = make();
	std::lock_guard guard(lock);
	return cache.try_emplace(full, p).first->second;
}

PresentationPtr load_algebra(const std::string &path_or_name)
{
	auto resolve = [](const std::string &base) { return load_algebra(base); };
	if (std::filesystem::exists(path_or_name))
		return load_presentation_file(path_or_name, resolve);
	return builtin(path_or_name);
}

} // namespace qcalc
